#pragma once

#include "chebwalk/graphs.hpp"

#include <vector>

namespace chebwalk {

/// Walk counts of one length k: s_k(v), e_k(v) and their total w_k.
struct WalkProfile {
  unsigned k = 0;
  std::vector<BigInt> starting;
  std::vector<BigInt> ending;
  BigInt total;

  bool operator==(const WalkProfile&) const = default;
};

// Matrix route: s_k = row sums of A^k, e_k = column sums of A^k.
WalkProfile walk_profile(const Graph& g, unsigned k);
WalkProfile walk_profile(const Digraph& d, unsigned k);
WalkProfile walk_profile(const Structure& s, unsigned k);

// Profiles for every length 0..max_k, from successive products A^k = A^(k-1) * A.
std::vector<WalkProfile> walk_profiles(const Graph& g, unsigned max_k);
std::vector<WalkProfile> walk_profiles(const Digraph& d, unsigned max_k);
std::vector<WalkProfile> walk_profiles(const Structure& s, unsigned max_k);

// Independent route: per-vertex dynamic programming over edge traversals.
// Never forms a matrix.
WalkProfile walk_profile_oracle(const Graph& g, unsigned k);
WalkProfile walk_profile_oracle(const Digraph& d, unsigned k);
WalkProfile walk_profile_oracle(const Structure& s, unsigned k);

std::vector<WalkProfile> walk_profiles_oracle(const Graph& g, unsigned max_k);
std::vector<WalkProfile> walk_profiles_oracle(const Digraph& d, unsigned max_k);

}  // namespace chebwalk
