#include "chebwalk/inequalities.hpp"

#include "chebwalk/walks.hpp"

namespace chebwalk {

namespace {

void finish(InequalityReport& r) {
  r.holds = direction_holds(r.applicable, r.lhs, r.rhs);
  r.equality = r.lhs == r.rhs;
}

}  // namespace

InequalityReport matrix_power_inequality(const RationalMatrix& a, unsigned k, unsigned l) {
  const auto ak = power(a, k);
  const auto al = power(a, l);
  const auto akl = power(a, k + l);

  InequalityReport r;
  r.detail.statement = "S(A^k) * S(A^l) vs n * S(A^(k+l))";
  r.detail.k = k;
  r.detail.l = l;
  r.detail.left_vector = col_sums(ak);
  r.detail.right_vector = row_sums(al);
  r.detail.ordering = ordering_relation(r.detail.left_vector, r.detail.right_vector);
  r.applicable = applicability(r.detail.ordering);
  r.lhs = entry_sum(ak) * entry_sum(al);
  r.rhs = Rational(static_cast<unsigned long>(a.dim())) * entry_sum(akl);
  finish(r);
  return r;
}

namespace {

template <class G>
InequalityReport walk_inequality(const G& g, unsigned k, unsigned l) {
  const auto w = walk_profiles(g, k + l);
  InequalityReport r;
  r.detail.statement = "w_k * w_l vs n * w_(k+l)";
  r.detail.k = k;
  r.detail.l = l;
  r.detail.left_vector = to_rationals(w[k].ending);
  r.detail.right_vector = to_rationals(w[l].starting);
  r.detail.ordering = ordering_relation(w[k].ending, w[l].starting);
  r.applicable = applicability(r.detail.ordering);
  r.lhs = w[k].total * w[l].total;
  r.rhs = Rational(static_cast<unsigned long>(g.order()) * w[k + l].total);
  finish(r);
  return r;
}

}  // namespace

InequalityReport digraph_walk_inequality(const Digraph& d, unsigned k, unsigned l) {
  return walk_inequality(d, k, l);
}

InequalityReport digraph_walk_inequality(const Graph& g, unsigned k, unsigned l) {
  return walk_inequality(g, k, l);
}

InequalityReport digraph_walk_inequality(const Structure& s, unsigned k, unsigned l) {
  return std::visit([&](const auto& x) { return digraph_walk_inequality(x, k, l); }, s);
}

CauchyRoute cauchy_route(const RationalMatrix& a) {
  const auto r = row_sums(a);
  Rational sum, sum_sq;
  for (const auto& x : r) {
    sum += x;
    sum_sq += x * x;
  }
  CauchyRoute c;
  c.lhs = sum * sum;
  c.rhs = Rational(static_cast<unsigned long>(a.dim())) * sum_sq;
  c.holds = c.lhs <= c.rhs;
  return c;
}

InequalityReport sum_symmetric_inequality(const RationalMatrix& a) {
  if (!is_sum_symmetric(a)) throw PreconditionError("matrix is not sum-symmetric");
  InequalityReport r;
  r.detail.statement = "S(A)^2 vs n * S(A^2)";
  r.detail.left_vector = col_sums(a);
  r.detail.right_vector = row_sums(a);
  r.detail.ordering = ordering_relation(r.detail.left_vector, r.detail.right_vector);
  r.applicable = applicability(r.detail.ordering);
  const Rational s = entry_sum(a);
  r.lhs = s * s;
  r.rhs = Rational(static_cast<unsigned long>(a.dim())) * entry_sum(a * a);
  finish(r);
  r.detail.cauchy = cauchy_route(a);
  return r;
}

InequalityReport eulerian_inequality(const Digraph& d) {
  if (!is_degree_balanced(d)) {
    throw PreconditionError("digraph is not degree-balanced (din != dout at some vertex)");
  }
  const auto w = walk_profiles(d, 2);
  InequalityReport r;
  r.detail.statement = "w_1^2 vs n * w_2";
  r.detail.k = 1;
  r.detail.l = 1;
  r.detail.left_vector = to_rationals(w[1].ending);
  r.detail.right_vector = to_rationals(w[1].starting);
  r.detail.ordering = ordering_relation(w[1].ending, w[1].starting);
  r.applicable = applicability(r.detail.ordering);
  r.lhs = w[1].total * w[1].total;
  r.rhs = Rational(static_cast<unsigned long>(d.order()) * w[2].total);
  finish(r);
  if (sgn(w[0].total) > 0 && sgn(w[1].total) > 0) {
    RatioForm ratio;
    ratio.lhs = Rational(w[1].total, w[0].total);
    ratio.rhs = Rational(w[2].total, w[1].total);
    ratio.lhs.canonicalize();
    ratio.rhs.canonicalize();
    ratio.holds = direction_holds(r.applicable, ratio.lhs, ratio.rhs);
    r.detail.ratio_form = ratio;
  }
  return r;
}

std::string_view to_string(EqualityClass c) {
  switch (c) {
    case EqualityClass::regular: return "regular";
    case EqualityClass::complete_bipartite: return "complete_bipartite";
    case EqualityClass::both: return "both";
    case EqualityClass::other: return "other";
    case EqualityClass::not_applicable: return "not_applicable";
  }
  return "not_applicable";
}

ZagrebReport zagreb_inequality(const Graph& g) {
  if (g.size() == 0) throw PreconditionError("Zagreb inequality needs at least one edge");

  ZagrebReport r;
  r.values = zagreb(g);
  r.m1_over_n = Rational(r.values.m1, static_cast<unsigned long>(r.values.n));
  r.m2_over_m = Rational(r.values.m2, static_cast<unsigned long>(r.values.m));
  r.m1_over_n.canonicalize();
  r.m2_over_m.canonicalize();

  const auto d = degree_sequence(g);
  const auto s = degree_sum_sequence(g);
  r.ordering = ordering_relation(d, s);
  r.hypothesis_similarly_ordered = r.ordering.similarly;
  r.holds = r.m1_over_n <= r.m2_over_m;
  r.equality = r.m1_over_n == r.m2_over_m;

  if (r.equality) {
    const auto flags = classify(g);
    if (flags.connected) {
      if (flags.regular && flags.complete_bipartite) r.equality_class = EqualityClass::both;
      else if (flags.regular) r.equality_class = EqualityClass::regular;
      else if (flags.complete_bipartite) r.equality_class = EqualityClass::complete_bipartite;
      else r.equality_class = EqualityClass::other;
    }
  }
  return r;
}

ZagrebReport zagreb_inequality(const Structure& s) {
  if (const auto* g = std::get_if<Graph>(&s)) return zagreb_inequality(*g);
  throw PreconditionError("Zagreb inequality is defined for undirected graphs only");
}

}  // namespace chebwalk
