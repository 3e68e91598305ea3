#pragma once

#include "chebwalk/rational.hpp"

#include <cassert>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace chebwalk {

/// Dense square matrix over an exact ring (BigInt or Rational).
/// Row-major storage; value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}
  Matrix(std::size_t n, std::vector<T> row_major) : n_(n), data_(std::move(row_major)) {
    if (data_.size() != n * n) throw std::invalid_argument("matrix data is not n*n");
  }

  static Matrix identity(std::size_t n) {
    Matrix id(n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
    return id;
  }

  std::size_t dim() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  bool operator==(const Matrix& other) const = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.n_ == b.n_);
    const std::size_t n = a.n_;
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < n; ++t) {
        const T& lhs = a(i, t);
        if (lhs == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if constexpr (std::is_same_v<T, BigInt>) {
            mpz_addmul(c(i, j).get_mpz_t(), lhs.get_mpz_t(), b(t, j).get_mpz_t());
          } else {
            c(i, j) += lhs * b(t, j);
          }
        }
      }
    }
    return c;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<BigInt>;

/// S(A): sum of all entries.
template <class T>
T entry_sum(const Matrix<T>& a) {
  T total = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& x : a.row(i)) total += x;
  return total;
}

template <class T>
std::vector<T> row_sums(const Matrix<T>& a) {
  std::vector<T> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& x : a.row(i)) r[i] += x;
  return r;
}

template <class T>
std::vector<T> col_sums(const Matrix<T>& a) {
  std::vector<T> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto row = a.row(i);
    for (std::size_t j = 0; j < a.dim(); ++j) c[j] += row[j];
  }
  return c;
}

/// Exact A^p by repeated squaring; A^0 is the identity.
template <class T>
Matrix<T> power(const Matrix<T>& a, unsigned p) {
  Matrix<T> result = Matrix<T>::identity(a.dim());
  Matrix<T> base = a;
  bool first = true;
  while (p > 0) {
    if (p & 1U) {
      result = first ? base : result * base;
      first = false;
    }
    p >>= 1U;
    if (p > 0) base = base * base;
  }
  return result;
}

template <class T>
bool is_symmetric(const Matrix<T>& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

/// r_i(A) = c_i(A) for every i.
template <class T>
bool is_sum_symmetric(const Matrix<T>& a) {
  return row_sums(a) == col_sums(a);
}

/// Parses the "matrix <n>" text format (see README).
RationalMatrix parse_matrix(std::string_view text);

std::string format_matrix(const RationalMatrix& a);

}  // namespace chebwalk
