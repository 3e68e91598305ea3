#include "chebwalk/indices.hpp"

#include "chebwalk/walks.hpp"

namespace chebwalk {

namespace {

const Graph& require_undirected(const Structure& s, const char* what) {
  if (const auto* g = std::get_if<Graph>(&s)) return *g;
  throw PreconditionError(std::string(what) + " is defined for undirected graphs only");
}

}  // namespace

ZagrebValues zagreb(const Graph& g) {
  ZagrebValues z;
  z.n = g.order();
  z.m = g.size();
  const auto d = degree_sequence(g);
  for (auto x : d) z.m1 += BigInt(static_cast<unsigned long>(x * x));
  for (const auto& e : g.edges()) z.m2 += BigInt(static_cast<unsigned long>(d[e.u] * d[e.v]));
  return z;
}

ZagrebValues zagreb(const Structure& s) { return zagreb(require_undirected(s, "zagreb")); }

WalkIdentityReport verify_walk_identities(const Graph& g) {
  const auto z = zagreb(g);
  const auto w = walk_profiles(g, 3);
  WalkIdentityReport r;
  r.m1_eq_w2 = z.m1 == w[2].total;
  r.two_m2_eq_w3 = 2 * z.m2 == w[3].total;
  r.w0_eq_n = w[0].total == static_cast<unsigned long>(z.n);
  r.w1_eq_2m = w[1].total == static_cast<unsigned long>(2 * z.m);
  return r;
}

WalkIdentityReport verify_walk_identities(const Structure& s) {
  return verify_walk_identities(require_undirected(s, "walk identities"));
}

}  // namespace chebwalk
