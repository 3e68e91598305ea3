#pragma once

#include "chebwalk/rational.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace chebwalk {

struct IndexPair {
  std::size_t i;
  std::size_t k;
  bool operator==(const IndexPair&) const = default;
};

/// Pairwise relation (a_i - a_k)(b_i - b_k) over all i < k.
/// Each witness is the lexicographically first pair breaking the
/// corresponding relation, present iff that flag is false.
struct OrderingVerdict {
  bool similarly = true;
  bool conversely = true;
  std::optional<IndexPair> similarly_witness;
  std::optional<IndexPair> conversely_witness;
};

/// Which direction of a Chebyshev-type inequality the hypothesis licenses.
enum class Applicability { le, ge, both, none };

std::string_view to_string(Applicability a);

inline Applicability applicability(const OrderingVerdict& v) {
  if (v.similarly && v.conversely) return Applicability::both;
  if (v.similarly) return Applicability::le;
  if (v.conversely) return Applicability::ge;
  return Applicability::none;
}

/// holds: le -> lhs <= rhs, ge -> lhs >= rhs, both -> lhs == rhs,
/// none -> lhs <= rhs (reported, not guaranteed).
bool direction_holds(Applicability dir, const Rational& lhs, const Rational& rhs);

namespace detail {
template <class T>
int sign_of_difference(const T& x, const T& y) {
  return (y < x) - (x < y);
}

inline void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("vectors have different lengths");
}
}  // namespace detail

template <class T>
OrderingVerdict ordering_relation(std::span<const T> a, std::span<const T> b) {
  detail::require_same_length(a.size(), b.size());
  OrderingVerdict v;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const int s = detail::sign_of_difference(a[i], a[k]) * detail::sign_of_difference(b[i], b[k]);
      if (s < 0 && v.similarly) {
        v.similarly = false;
        v.similarly_witness = IndexPair{i, k};
      } else if (s > 0 && v.conversely) {
        v.conversely = false;
        v.conversely_witness = IndexPair{i, k};
      }
      if (!v.similarly && !v.conversely) return v;
    }
  }
  return v;
}

template <class T>
OrderingVerdict ordering_relation(const std::vector<T>& a, const std::vector<T>& b) {
  return ordering_relation(std::span<const T>(a), std::span<const T>(b));
}

/// Decides "similarly ordered" by searching for a permutation that makes
/// both sequences nonincreasing: sort by a descending (ties by b
/// descending) and test whether b is then nonincreasing.
template <class T>
bool similarly_ordered_by_sort(std::span<const T> a, std::span<const T> b) {
  detail::require_same_length(a.size(), b.size());
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    if (a[x] != a[y]) return a[y] < a[x];
    return b[y] < b[x];
  });
  for (std::size_t t = 1; t < idx.size(); ++t)
    if (b[idx[t - 1]] < b[idx[t]]) return false;
  return true;
}

/// One sequence nonincreasing and the other nondecreasing under a common permutation.
template <class T>
bool conversely_ordered_by_sort(std::span<const T> a, std::span<const T> b) {
  detail::require_same_length(a.size(), b.size());
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    if (a[x] != a[y]) return a[y] < a[x];
    return b[x] < b[y];
  });
  for (std::size_t t = 1; t < idx.size(); ++t)
    if (b[idx[t]] < b[idx[t - 1]]) return false;
  return true;
}

struct ChebyshevReport {
  Rational lhs;
  Rational rhs;
  Applicability direction = Applicability::none;
  bool holds = false;
  bool equality = false;
};

/// (sum p_i a_i)(sum p_i b_i) against (sum p_i)(sum p_i a_i b_i).
/// Throws std::invalid_argument on length mismatch or a negative weight.
ChebyshevReport chebyshev_weighted(std::span<const Rational> a, std::span<const Rational> b,
                                   std::span<const Rational> p);

/// Weights all one: (sum a_i)(sum b_i) against n * sum a_i b_i.
ChebyshevReport chebyshev_unweighted(std::span<const Rational> a, std::span<const Rational> b);

/// Weighted inequality on the powered tuples (a_i^r), (b_i^r); the right
/// side uses (a_i b_i)^r. Negative r requires nonzero entries.
ChebyshevReport chebyshev_power(std::span<const Rational> a, std::span<const Rational> b,
                                std::span<const Rational> p, long r);

struct WeightedMeans {
  Rational product_of_means;  // (sum p a / sum p) * (sum p b / sum p)
  Rational mean_of_products;  // sum p a b / sum p
};

/// Mean form of the weighted inequality; requires sum p > 0.
WeightedMeans chebyshev_weighted_means(std::span<const Rational> a, std::span<const Rational> b,
                                       std::span<const Rational> p);

Rational rational_pow(const Rational& x, long r);

}  // namespace chebwalk
