#include "chebwalk/orderings.hpp"

namespace chebwalk {

std::string_view to_string(Applicability a) {
  switch (a) {
    case Applicability::le: return "le";
    case Applicability::ge: return "ge";
    case Applicability::both: return "both";
    case Applicability::none: return "none";
  }
  return "none";
}

bool direction_holds(Applicability dir, const Rational& lhs, const Rational& rhs) {
  switch (dir) {
    case Applicability::ge: return lhs >= rhs;
    case Applicability::both: return lhs == rhs;
    case Applicability::le:
    case Applicability::none: return lhs <= rhs;
  }
  return false;
}

namespace {

void check_weights(std::span<const Rational> p) {
  for (const auto& x : p)
    if (sgn(x) < 0) throw std::invalid_argument("weights must be nonnegative");
}

}  // namespace

ChebyshevReport chebyshev_weighted(std::span<const Rational> a, std::span<const Rational> b,
                                   std::span<const Rational> p) {
  detail::require_same_length(a.size(), b.size());
  detail::require_same_length(a.size(), p.size());
  check_weights(p);

  Rational sum_p, sum_pa, sum_pb, sum_pab;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum_p += p[i];
    sum_pa += p[i] * a[i];
    sum_pb += p[i] * b[i];
    sum_pab += p[i] * a[i] * b[i];
  }
  ChebyshevReport r;
  r.lhs = sum_pa * sum_pb;
  r.rhs = sum_p * sum_pab;
  r.direction = applicability(ordering_relation(a, b));
  r.holds = direction_holds(r.direction, r.lhs, r.rhs);
  r.equality = r.lhs == r.rhs;
  return r;
}

ChebyshevReport chebyshev_unweighted(std::span<const Rational> a, std::span<const Rational> b) {
  std::vector<Rational> ones(a.size(), Rational(1));
  return chebyshev_weighted(a, b, ones);
}

Rational rational_pow(const Rational& x, long r) {
  if (r < 0 && sgn(x) == 0) throw std::invalid_argument("zero raised to a negative power");
  const unsigned long e = r < 0 ? static_cast<unsigned long>(-r) : static_cast<unsigned long>(r);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
  Rational out = r < 0 ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

ChebyshevReport chebyshev_power(std::span<const Rational> a, std::span<const Rational> b,
                                std::span<const Rational> p, long r) {
  detail::require_same_length(a.size(), b.size());
  detail::require_same_length(a.size(), p.size());
  check_weights(p);

  std::vector<Rational> ar, br;
  ar.reserve(a.size());
  br.reserve(b.size());
  Rational sum_p, sum_par, sum_pbr, sum_pabr;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ar.push_back(rational_pow(a[i], r));
    br.push_back(rational_pow(b[i], r));
    sum_p += p[i];
    sum_par += p[i] * ar.back();
    sum_pbr += p[i] * br.back();
    sum_pabr += p[i] * rational_pow(Rational(a[i] * b[i]), r);
  }
  ChebyshevReport rep;
  rep.lhs = sum_par * sum_pbr;
  rep.rhs = sum_p * sum_pabr;
  rep.direction = applicability(ordering_relation(std::span<const Rational>(ar), std::span<const Rational>(br)));
  rep.holds = direction_holds(rep.direction, rep.lhs, rep.rhs);
  rep.equality = rep.lhs == rep.rhs;
  return rep;
}

WeightedMeans chebyshev_weighted_means(std::span<const Rational> a, std::span<const Rational> b,
                                       std::span<const Rational> p) {
  detail::require_same_length(a.size(), b.size());
  detail::require_same_length(a.size(), p.size());
  check_weights(p);
  Rational sum_p;
  for (const auto& x : p) sum_p += x;
  if (sgn(sum_p) == 0) throw std::invalid_argument("weights sum to zero");

  Rational mean_a, mean_b, mean_ab;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational w = p[i] / sum_p;
    mean_a += w * a[i];
    mean_b += w * b[i];
    mean_ab += w * a[i] * b[i];
  }
  return {mean_a * mean_b, mean_ab};
}

}  // namespace chebwalk
