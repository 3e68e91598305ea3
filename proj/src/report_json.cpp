#include "chebwalk/report_json.hpp"

namespace chebwalk {

using nlohmann::json;

namespace {

json pair_json(const std::optional<IndexPair>& p) {
  if (!p) return nullptr;
  return json::array({p->i, p->k});
}

}  // namespace

json rationals_json(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& q : values) out.push_back(to_fraction_string(q));
  return out;
}

json integers_json(std::span<const BigInt> values) {
  json out = json::array();
  for (const auto& z : values) out.push_back(z.get_str());
  return out;
}

json to_json(const OrderingVerdict& v) {
  return {
      {"similarly", v.similarly},
      {"conversely", v.conversely},
      {"similarly_witness", pair_json(v.similarly_witness)},
      {"conversely_witness", pair_json(v.conversely_witness)},
  };
}

json to_json(const ChebyshevReport& r) {
  return {
      {"lhs", to_fraction_string(r.lhs)},
      {"rhs", to_fraction_string(r.rhs)},
      {"direction", to_string(r.direction)},
      {"holds", r.holds},
      {"equality", r.equality},
  };
}

json to_json(const InequalityReport& r) {
  json detail = {
      {"statement", r.detail.statement},
      {"left_vector", rationals_json(r.detail.left_vector)},
      {"right_vector", rationals_json(r.detail.right_vector)},
      {"ordering", to_json(r.detail.ordering)},
  };
  if (r.detail.k) detail["k"] = *r.detail.k;
  if (r.detail.l) detail["l"] = *r.detail.l;
  if (r.detail.ratio_form) {
    detail["ratio_form"] = {
        {"lhs", to_fraction_string(r.detail.ratio_form->lhs)},
        {"rhs", to_fraction_string(r.detail.ratio_form->rhs)},
        {"holds", r.detail.ratio_form->holds},
    };
  }
  if (r.detail.cauchy) {
    detail["cauchy"] = {
        {"lhs", to_fraction_string(r.detail.cauchy->lhs)},
        {"rhs", to_fraction_string(r.detail.cauchy->rhs)},
        {"holds", r.detail.cauchy->holds},
    };
  }
  return {
      {"applicable", to_string(r.applicable)},
      {"lhs", to_fraction_string(r.lhs)},
      {"rhs", to_fraction_string(r.rhs)},
      {"holds", r.holds},
      {"equality", r.equality},
      {"detail", std::move(detail)},
  };
}

json to_json(const ZagrebValues& z) {
  return {{"m1", z.m1.get_str()}, {"m2", z.m2.get_str()}, {"n", z.n}, {"m", z.m}};
}

json to_json(const ZagrebReport& r) {
  return {
      {"m1_over_n", to_fraction_string(r.m1_over_n)},
      {"m2_over_m", to_fraction_string(r.m2_over_m)},
      {"hypothesis_similarly_ordered", r.hypothesis_similarly_ordered},
      {"holds", r.holds},
      {"equality", r.equality},
      {"equality_class", to_string(r.equality_class)},
      {"values", to_json(r.values)},
      {"ordering", to_json(r.ordering)},
  };
}

json to_json(const WalkIdentityReport& r) {
  return {
      {"m1_eq_w2", r.m1_eq_w2},
      {"two_m2_eq_w3", r.two_m2_eq_w3},
      {"w0_eq_n", r.w0_eq_n},
      {"w1_eq_2m", r.w1_eq_2m},
  };
}

json to_json(const WalkProfile& p) {
  return {
      {"k", p.k},
      {"starting", integers_json(p.starting)},
      {"ending", integers_json(p.ending)},
      {"total", p.total.get_str()},
  };
}

json to_json(const GraphClassFlags& f) {
  return {
      {"connected", f.connected}, {"tree", f.tree},
      {"forest", f.forest},       {"bipartite", f.bipartite},
      {"complete_bipartite", f.complete_bipartite},
      {"regular", f.regular},     {"chemical", f.chemical},
  };
}

json to_json(const SearchSpec& s) {
  json predicate = {{"kind", to_string(s.predicate.kind)}};
  if (s.predicate.kind == PredicateKind::walk_ineq_violation ||
      s.predicate.kind == PredicateKind::ordering_census) {
    predicate["k"] = s.predicate.k;
    predicate["l"] = s.predicate.l;
  }
  return {
      {"directed", s.range.directed},
      {"min_n", s.range.min_n},
      {"max_n", s.range.max_n},
      {"class_filter", to_string(s.range.filter)},
      {"predicate", std::move(predicate)},
      {"limit", s.limit},
  };
}

json to_json(const SearchResult& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({
        {"n", w.n},
        {"code", w.code},
        {"graph", w.graph},
        {"report", std::visit([](const auto& rep) { return to_json(rep); }, w.report)},
    });
  }
  json by_n = json::array();
  for (const auto& c : r.summary.by_n) {
    by_n.push_back({{"n", c.n}, {"examined", c.examined}, {"matched", c.matched}});
  }
  json summary = {
      {"by_n", std::move(by_n)},
      {"matched_classes", r.summary.matched_classes},
      {"smallest_match_n", r.summary.smallest_match_n ? json(*r.summary.smallest_match_n) : json(nullptr)},
  };
  if (r.spec.predicate.kind == PredicateKind::ordering_census) summary["ordering"] = r.summary.ordering;
  return {
      {"spec", to_json(r.spec)},
      {"examined", r.examined},
      {"matched", r.matched},
      {"witnesses", std::move(witnesses)},
      {"summary", std::move(summary)},
  };
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace chebwalk
