#include "chebwalk/walks.hpp"

namespace chebwalk {

namespace {

WalkProfile profile_from_power(const IntegerMatrix& ak, unsigned k) {
  WalkProfile p;
  p.k = k;
  p.starting = row_sums(ak);
  p.ending = col_sums(ak);
  for (const auto& x : p.starting) p.total += x;
  return p;
}

template <class G>
std::vector<WalkProfile> profiles_by_products(const G& g, unsigned max_k) {
  const auto a = integer_adjacency_matrix(g);
  std::vector<WalkProfile> out;
  out.reserve(max_k + 1);
  auto ak = IntegerMatrix::identity(g.order());
  out.push_back(profile_from_power(ak, 0));
  for (unsigned k = 1; k <= max_k; ++k) {
    ak = ak * a;
    out.push_back(profile_from_power(ak, k));
  }
  return out;
}

// forward[v]: number of walks of the current length ending at v, when
// extended along out-arcs; backward likewise along in-arcs.
template <class Forward, class Backward>
std::vector<WalkProfile> profiles_by_dp(std::size_t n, unsigned max_k, Forward&& successors,
                                        Backward&& predecessors) {
  std::vector<WalkProfile> out;
  out.reserve(max_k + 1);
  std::vector<BigInt> ending(n, 1);    // e_k(v): walks of length k ending at v
  std::vector<BigInt> starting(n, 1);  // s_k(v): walks of length k starting at v
  for (unsigned k = 0;; ++k) {
    WalkProfile p;
    p.k = k;
    p.starting = starting;
    p.ending = ending;
    for (const auto& x : ending) p.total += x;
    out.push_back(std::move(p));
    if (k == max_k) break;

    std::vector<BigInt> next_ending(n), next_starting(n);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : successors(v)) next_ending[w] += ending[v];
      for (Vertex w : predecessors(v)) next_starting[w] += starting[v];
    }
    ending = std::move(next_ending);
    starting = std::move(next_starting);
  }
  return out;
}

}  // namespace

WalkProfile walk_profile(const Graph& g, unsigned k) {
  return profile_from_power(power(integer_adjacency_matrix(g), k), k);
}

WalkProfile walk_profile(const Digraph& d, unsigned k) {
  return profile_from_power(power(integer_adjacency_matrix(d), k), k);
}

WalkProfile walk_profile(const Structure& s, unsigned k) {
  return std::visit([k](const auto& x) { return walk_profile(x, k); }, s);
}

std::vector<WalkProfile> walk_profiles(const Graph& g, unsigned max_k) {
  return profiles_by_products(g, max_k);
}

std::vector<WalkProfile> walk_profiles(const Digraph& d, unsigned max_k) {
  return profiles_by_products(d, max_k);
}

std::vector<WalkProfile> walk_profiles(const Structure& s, unsigned max_k) {
  return std::visit([max_k](const auto& x) { return walk_profiles(x, max_k); }, s);
}

std::vector<WalkProfile> walk_profiles_oracle(const Graph& g, unsigned max_k) {
  auto nb = [&](Vertex v) { return g.neighbours(v); };
  return profiles_by_dp(g.order(), max_k, nb, nb);
}

std::vector<WalkProfile> walk_profiles_oracle(const Digraph& d, unsigned max_k) {
  return profiles_by_dp(
      d.order(), max_k, [&](Vertex v) { return d.successors(v); },
      [&](Vertex v) { return d.predecessors(v); });
}

WalkProfile walk_profile_oracle(const Graph& g, unsigned k) {
  return std::move(walk_profiles_oracle(g, k).back());
}

WalkProfile walk_profile_oracle(const Digraph& d, unsigned k) {
  return std::move(walk_profiles_oracle(d, k).back());
}

WalkProfile walk_profile_oracle(const Structure& s, unsigned k) {
  return std::visit([k](const auto& x) { return walk_profile_oracle(x, k); }, s);
}

}  // namespace chebwalk
