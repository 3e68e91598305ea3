#pragma once

// Shared test graphs, random generators and brute-force oracles.
// The oracles here never call into the library's walk or matrix code.

#include "chebwalk/graphs.hpp"
#include "chebwalk/matrices.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace fixtures {

using namespace chebwalk;

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return Graph(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) e.push_back({u, v});
  return Graph(a + b, e);
}

inline Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

inline Digraph directed_cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return Digraph(n, e);
}

// Arcs {0->1, 0->2, 1->2}.
inline Digraph transitive_triangle() { return Digraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

// Every simple graph on n vertices, by edge subset, without using the
// library enumerator.
inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t j = 0; j < slots.size(); ++j)
      if ((mask >> j) & 1U) e.push_back(slots[j]);
    out.emplace_back(n, e);
  }
  return out;
}

inline std::vector<Digraph> all_digraphs(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) slots.push_back({u, v});
  std::vector<Digraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t j = 0; j < slots.size(); ++j)
      if ((mask >> j) & 1U) e.push_back(slots[j]);
    out.emplace_back(n, e);
  }
  return out;
}

inline Graph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Edge> e;
  while (e.size() < m) {
    Vertex u = pick(rng), v = pick(rng);
    if (u != v) e.push_back({u, v});
  }
  return Graph(n, e);
}

inline Digraph random_multidigraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < m; ++i) e.push_back({pick(rng), pick(rng)});
  return Digraph(n, e);
}

inline Rational random_rational(std::mt19937_64& rng, long lo = -9, long hi = 9, long max_den = 5) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_rational(rng);
  return a;
}

inline RationalMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = random_rational(rng);
  return a;
}

// Sum-symmetric: a symmetric matrix plus a circulation (a weighted sum of
// directed cycles), which leaves row sum == column sum at every index.
inline RationalMatrix random_sum_symmetric(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix a = random_symmetric(rng, n);
  if (n < 2) return a;
  std::uniform_int_distribution<std::size_t> len(2, n);
  std::uniform_int_distribution<int> count(0, 3);
  for (int c = count(rng); c > 0; --c) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t L = len(rng);
    const Rational w = random_rational(rng, 1, 9, 4);
    for (std::size_t i = 0; i < L; ++i) a(perm[i], perm[(i + 1) % L]) += w;
  }
  return a;
}

// Counts walks by explicit recursion over edge choices. Exponential; only
// for tiny inputs. Returns per-start counts, per-end counts and the total.
struct BruteWalks {
  std::vector<std::uint64_t> starting, ending;
  std::uint64_t total = 0;
};

inline BruteWalks brute_walks(std::size_t n, const std::vector<Edge>& arcs, unsigned k) {
  BruteWalks b{std::vector<std::uint64_t>(n), std::vector<std::uint64_t>(n), 0};
  std::function<void(Vertex, Vertex, unsigned)> go = [&](Vertex start, Vertex at, unsigned left) {
    if (left == 0) {
      ++b.starting[start];
      ++b.ending[at];
      ++b.total;
      return;
    }
    for (const auto& a : arcs)
      if (a.u == at) go(start, a.v, left - 1);
  };
  for (Vertex v = 0; v < n; ++v) go(v, v, k);
  return b;
}

// Undirected edges as arcs in both directions.
inline std::vector<Edge> both_ways(const Graph& g) {
  std::vector<Edge> arcs;
  for (const auto& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return arcs;
}

}  // namespace fixtures
