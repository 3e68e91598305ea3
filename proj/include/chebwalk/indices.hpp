#pragma once

#include "chebwalk/graphs.hpp"

namespace chebwalk {

struct ZagrebValues {
  BigInt m1;  // sum of squared degrees
  BigInt m2;  // sum over the edge multiset of d_x * d_y
  std::size_t n = 0;
  std::size_t m = 0;
};

ZagrebValues zagreb(const Graph& g);
// Rejects digraphs with PreconditionError.
ZagrebValues zagreb(const Structure& s);

struct WalkIdentityReport {
  bool m1_eq_w2 = false;
  bool two_m2_eq_w3 = false;
  bool w0_eq_n = false;
  bool w1_eq_2m = false;

  bool all() const { return m1_eq_w2 && two_m2_eq_w3 && w0_eq_n && w1_eq_2m; }
};

/// Compares the Zagreb values against walk totals w_0..w_3.
WalkIdentityReport verify_walk_identities(const Graph& g);
WalkIdentityReport verify_walk_identities(const Structure& s);

}  // namespace chebwalk
