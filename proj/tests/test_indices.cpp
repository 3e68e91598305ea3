#include "chebwalk/indices.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace chebwalk;
using namespace fixtures;

TEST_CASE("zagreb examples") {
  auto p3 = zagreb(path(3));
  CHECK(p3.m1 == 6);
  CHECK(p3.m2 == 4);
  CHECK(p3.n == 3);
  CHECK(p3.m == 2);

  auto k13 = zagreb(star(3));
  CHECK(k13.m1 == 12);
  CHECK(k13.m2 == 9);

  auto empty = zagreb(Graph(3));
  CHECK(empty.m1 == 0);
  CHECK(empty.m2 == 0);
}

TEST_CASE("zagreb on a multigraph sums over the edge multiset") {
  // Double edge 0-1 plus edge 1-2: degrees (2,3,1).
  auto z = zagreb(Graph(3, {{0, 1}, {0, 1}, {1, 2}}));
  CHECK(z.m1 == 4 + 9 + 1);
  CHECK(z.m2 == 6 + 6 + 3);
}

TEST_CASE("zagreb rejects digraphs") {
  Structure s = directed_cycle(3);
  CHECK_THROWS_AS(zagreb(s), PreconditionError);
  CHECK_THROWS_AS(verify_walk_identities(s), PreconditionError);
}

TEST_CASE("verify_walk_identities examples") {
  CHECK(verify_walk_identities(path(3)).all());
  CHECK(verify_walk_identities(cycle(4)).all());
  CHECK(verify_walk_identities(Graph(1)).all());
  auto z = zagreb(cycle(4));
  CHECK(z.m1 == 16);
  CHECK(z.m2 == 16);
}

TEST_CASE("M1 is zero exactly for edgeless graphs") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) CHECK((zagreb(g).m1 == 0) == (g.size() == 0));
}

TEST_CASE("walk identities hold on every graph n <= 5 and on random multigraphs") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) CHECK(verify_walk_identities(g).all());

  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    auto g = random_multigraph(rng, 2 + i % 6, i % 14);
    CAPTURE(format_graph(g));
    CHECK(verify_walk_identities(g).all());
  }
}
