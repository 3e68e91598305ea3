#pragma once

#include "chebwalk/graphs.hpp"
#include "chebwalk/indices.hpp"
#include "chebwalk/orderings.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chebwalk {

/// w_1/w_0 against w_2/w_1, reported next to the product form.
struct RatioForm {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// Cauchy route for sum-symmetric matrices: (sum r_i)^2 against n * sum r_i^2.
struct CauchyRoute {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

struct InequalityDetail {
  std::string statement;
  std::optional<unsigned> k;
  std::optional<unsigned> l;
  // Hypothesis vectors: c^[k] and r^[l] (matrices) or e_k and s_l (walks).
  std::vector<Rational> left_vector;
  std::vector<Rational> right_vector;
  OrderingVerdict ordering;
  std::optional<RatioForm> ratio_form;
  std::optional<CauchyRoute> cauchy;
};

struct InequalityReport {
  Applicability applicable = Applicability::none;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool equality = false;
  InequalityDetail detail;
};

/// S(A^k) S(A^l) against n S(A^(k+l)), licensed by the ordering of the
/// column sums of A^k and the row sums of A^l.
InequalityReport matrix_power_inequality(const RationalMatrix& a, unsigned k, unsigned l);

/// w_k w_l against n w_(k+l), licensed by the ordering of e_k and s_l.
InequalityReport digraph_walk_inequality(const Digraph& d, unsigned k, unsigned l);
InequalityReport digraph_walk_inequality(const Graph& g, unsigned k, unsigned l);
InequalityReport digraph_walk_inequality(const Structure& s, unsigned k, unsigned l);

/// S(A)^2 <= n S(A^2). Throws PreconditionError unless A is sum-symmetric.
InequalityReport sum_symmetric_inequality(const RationalMatrix& a);

CauchyRoute cauchy_route(const RationalMatrix& a);

/// w_1^2 <= n w_2. Throws PreconditionError unless din == dout everywhere.
InequalityReport eulerian_inequality(const Digraph& d);

enum class EqualityClass { regular, complete_bipartite, both, other, not_applicable };

std::string_view to_string(EqualityClass c);

struct ZagrebReport {
  Rational m1_over_n;
  Rational m2_over_m;
  bool hypothesis_similarly_ordered = false;
  bool holds = false;  // M1/n <= M2/m, whether or not the hypothesis holds
  bool equality = false;
  EqualityClass equality_class = EqualityClass::not_applicable;
  ZagrebValues values;
  OrderingVerdict ordering;  // of (d_i) and (S_i)
};

/// M1/n against M2/m. Throws PreconditionError for m = 0.
/// equality_class is only filled for connected graphs attaining equality.
ZagrebReport zagreb_inequality(const Graph& g);
ZagrebReport zagreb_inequality(const Structure& s);

}  // namespace chebwalk
