#include "chebwalk/cli.hpp"

#include "chebwalk/graphs.hpp"
#include "chebwalk/indices.hpp"
#include "chebwalk/inequalities.hpp"
#include "chebwalk/report_json.hpp"
#include "chebwalk/search.hpp"
#include "chebwalk/walks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace chebwalk::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class Range>
std::string tuple_text(const Range& values) {
  std::string out = "(";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ", ";
    out += to_string(v);
    first = false;
  }
  return out + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string_view relation_symbol(Applicability a) {
  switch (a) {
    case Applicability::le: return "<=";
    case Applicability::ge: return ">=";
    case Applicability::both: return "==";
    case Applicability::none: return "<=";
  }
  return "<=";
}

std::string ordering_text(const OrderingVerdict& v) {
  if (v.similarly && v.conversely) return "similarly and conversely ordered";
  if (v.similarly) return "similarly ordered";
  if (v.conversely) return "conversely ordered";
  std::ostringstream out;
  out << "neither (similarly broken at (" << v.similarly_witness->i << ", " << v.similarly_witness->k
      << "), conversely broken at (" << v.conversely_witness->i << ", " << v.conversely_witness->k
      << "))";
  return out.str();
}

void print_report(std::ostream& out, const InequalityReport& r) {
  out << "statement:  " << r.detail.statement << '\n';
  if (r.detail.k) out << "k, l:       " << *r.detail.k << ", " << *r.detail.l << '\n';
  out << "hypothesis: " << tuple_text(r.detail.left_vector) << " vs "
      << tuple_text(r.detail.right_vector) << ": " << ordering_text(r.detail.ordering) << '\n';
  out << "applicable: " << to_string(r.applicable) << '\n';
  out << "inequality: " << to_string(r.lhs) << ' ' << relation_symbol(r.applicable) << ' '
      << to_string(r.rhs) << '\n';
  out << "holds:      " << yes_no(r.holds) << '\n';
  out << "equality:   " << yes_no(r.equality) << '\n';
  if (r.detail.ratio_form) {
    out << "ratio form: " << to_string(r.detail.ratio_form->lhs) << ' '
        << relation_symbol(r.applicable) << ' ' << to_string(r.detail.ratio_form->rhs)
        << " (holds: " << yes_no(r.detail.ratio_form->holds) << ")\n";
  }
  if (r.detail.cauchy) {
    out << "cauchy:     " << to_string(r.detail.cauchy->lhs) << " <= "
        << to_string(r.detail.cauchy->rhs) << " (holds: " << yes_no(r.detail.cauchy->holds) << ")\n";
  }
}

void print_report(std::ostream& out, const ZagrebReport& r) {
  out << "M1 = " << to_string(r.values.m1) << ", M2 = " << to_string(r.values.m2)
      << ", n = " << r.values.n << ", m = " << r.values.m << '\n';
  out << "M1/n = " << to_string(r.m1_over_n) << ", M2/m = " << to_string(r.m2_over_m) << '\n';
  out << "hypothesis: (d_i), (S_i) " << ordering_text(r.ordering) << '\n';
  out << "holds:      " << yes_no(r.holds) << '\n';
  out << "equality:   " << yes_no(r.equality) << '\n';
  out << "class:      " << to_string(r.equality_class) << '\n';
}

struct Options {
  bool json = false;
  std::string input;
  unsigned length = 0;
  bool per_vertex = false;
  std::string which;
  unsigned k = 1;
  unsigned l = 1;
  // search
  bool directed = false;
  std::string class_filter = "all";
  std::size_t min_n = 1;
  std::size_t max_n = 0;
  std::string predicate;
  std::size_t limit = 10;
  bool override_cap = false;
  unsigned threads = 0;
};

int cmd_walks(const Options& o, std::ostream& out) {
  const auto s = parse_graph(read_file(o.input));
  const auto p = walk_profile(s, o.length);
  if (o.json) {
    auto j = to_json(p);
    if (!o.per_vertex) {
      j.erase("starting");
      j.erase("ending");
    }
    out << dump(j);
    return ok;
  }
  out << "w_" << o.length << " = " << to_string(p.total) << '\n';
  if (o.per_vertex) {
    out << "s_" << o.length << " = " << tuple_text(p.starting) << '\n';
    out << "e_" << o.length << " = " << tuple_text(p.ending) << '\n';
  }
  return ok;
}

int cmd_indices(const Options& o, std::ostream& out) {
  const auto s = parse_graph(read_file(o.input));
  const auto z = zagreb(s);
  const auto id = verify_walk_identities(s);
  if (o.json) {
    out << dump({{"zagreb", to_json(z)}, {"walk_identities", to_json(id)}});
  } else {
    out << "M1 = " << to_string(z.m1) << "\nM2 = " << to_string(z.m2) << "\nn = " << z.n
        << "\nm = " << z.m << '\n';
    out << "M1 = w_2:   " << yes_no(id.m1_eq_w2) << "\n2 M2 = w_3: " << yes_no(id.two_m2_eq_w3)
        << "\nw_0 = n:    " << yes_no(id.w0_eq_n) << "\nw_1 = 2m:   " << yes_no(id.w1_eq_2m) << '\n';
  }
  return id.all() ? ok : violation;
}

template <class R>
int emit(const Options& o, std::ostream& out, const R& report) {
  if (o.json) out << dump(to_json(report));
  else print_report(out, report);
  return report.holds ? ok : violation;
}

int cmd_check(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.input);
  if (o.which == "zagreb") return emit(o, out, zagreb_inequality(parse_graph(text)));
  if (o.which == "walk-ineq") return emit(o, out, digraph_walk_inequality(parse_graph(text), o.k, o.l));
  if (o.which == "sum-symmetric") return emit(o, out, sum_symmetric_inequality(parse_matrix(text)));
  // eulerian
  const auto s = parse_graph(text);
  const auto* d = std::get_if<Digraph>(&s);
  if (!d) throw PreconditionError("eulerian check needs a directed graph");
  return emit(o, out, eulerian_inequality(*d));
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const auto a = parse_matrix(read_file(o.input));
  return emit(o, out, matrix_power_inequality(a, o.k, o.l));
}

void print_search(std::ostream& out, const SearchResult& r) {
  const auto& s = r.spec;
  out << "search: " << (s.range.directed ? "directed" : "undirected") << ", n = " << s.range.min_n
      << ".." << s.range.max_n << ", class = " << to_string(s.range.filter)
      << ", predicate = " << to_string(s.predicate.kind);
  if (s.predicate.kind == PredicateKind::walk_ineq_violation ||
      s.predicate.kind == PredicateKind::ordering_census) {
    out << "(" << s.predicate.k << ", " << s.predicate.l << ")";
  }
  out << "\nexamined: " << r.examined << ", matched: " << r.matched << "\n\n";
  out << std::setw(4) << "n" << std::setw(14) << "examined" << std::setw(14) << "matched" << '\n';
  for (const auto& c : r.summary.by_n) {
    out << std::setw(4) << c.n << std::setw(14) << c.examined << std::setw(14) << c.matched << '\n';
  }
  if (r.summary.smallest_match_n) out << "\nsmallest match: n = " << *r.summary.smallest_match_n << '\n';
  if (!r.summary.ordering.empty()) {
    out << "\nordering census:\n";
    for (const auto& [k, v] : r.summary.ordering) out << "  " << k << ": " << v << '\n';
  }
  if (!r.summary.matched_classes.empty()) {
    out << "\nclasses among matches:\n";
    for (const auto& [k, v] : r.summary.matched_classes) out << "  " << k << ": " << v << '\n';
  }
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const auto& w = r.witnesses[i];
    out << "\nwitness " << i + 1 << " (n = " << w.n << ", code = " << w.code << ")\n" << w.graph;
    std::visit([&](const auto& rep) { print_report(out, rep); }, w.report);
  }
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  SearchSpec spec;
  spec.range.directed = o.directed;
  spec.range.min_n = o.min_n;
  spec.range.max_n = o.max_n;
  spec.range.filter = parse_class_filter(o.class_filter);
  spec.range.override_cap = o.override_cap;
  spec.predicate.kind = parse_predicate_kind(o.predicate);
  spec.predicate.k = o.k;
  spec.predicate.l = o.l;
  spec.limit = o.limit;
  spec.threads = o.threads;

  const auto result = run_search(spec, [&](std::size_t n, std::uint64_t examined, std::uint64_t matched) {
    err << "n = " << n << " done: " << examined << " examined, " << matched << " matched\n";
  });
  if (o.json) out << dump(to_json(result));
  else print_search(out, result);
  return is_violation_predicate(spec.predicate.kind) && result.matched > 0 ? violation : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Walk counts, Zagreb indices and Chebyshev-type inequalities with exact arithmetic"};
  app.name(args.empty() ? "chebwalk" : args.front());
  app.require_subcommand(1);

  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");

  auto* walks = app.add_subcommand("walks", "Count k-step walks");
  walks->add_option("--input", o.input, "Edge-list file")->required();
  walks->add_option("--length", o.length, "Walk length k")->required();
  walks->add_flag("--per-vertex", o.per_vertex, "Also print s_k and e_k");

  auto* indices = app.add_subcommand("indices", "Zagreb indices and walk identities");
  indices->add_option("--input", o.input, "Edge-list file (undirected)")->required();

  auto* check = app.add_subcommand("check", "Check one inequality");
  check->add_option("which", o.which, "zagreb | walk-ineq | sum-symmetric | eulerian")
      ->required()
      ->check(CLI::IsMember({"zagreb", "walk-ineq", "sum-symmetric", "eulerian"}));
  check->add_option("--input", o.input, "Graph or matrix file")->required();
  auto* check_k = check->add_option("--k", o.k, "Walk length k (walk-ineq)");
  auto* check_l = check->add_option("--l", o.l, "Walk length l (walk-ineq)");

  auto* matrix = app.add_subcommand("matrix", "Power inequality for a rational matrix");
  matrix->add_option("--input", o.input, "Matrix file")->required();
  matrix->add_option("--k", o.k, "Exponent k")->required();
  matrix->add_option("--l", o.l, "Exponent l")->required();

  auto* search = app.add_subcommand("search", "Exhaustive search over small graphs");
  search->add_flag("--directed", o.directed, "Enumerate loop-free digraphs");
  search->add_option("--class", o.class_filter, "all or comma-separated classes");
  search->add_option("--min-n", o.min_n, "Smallest vertex count");
  search->add_option("--max-n", o.max_n, "Largest vertex count")->required();
  search->add_option("--predicate", o.predicate,
                     "zagreb-violation | zagreb-equality | walk-ineq-violation | ordering-census")
      ->required();
  search->add_option("--k", o.k, "k for walk predicates");
  search->add_option("--l", o.l, "l for walk predicates");
  search->add_option("--limit", o.limit, "Maximum witnesses to report");
  search->add_flag("--override-cap", o.override_cap, "Allow max-n above the default cap");
  search->add_option("--threads", o.threads, "Worker threads (0: all cores)");

  std::vector<std::string> argv_tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (*walks) return cmd_walks(o, out);
    if (*indices) return cmd_indices(o, out);
    if (*check) {
      if (o.which != "walk-ineq" && (check_k->count() > 0 || check_l->count() > 0)) {
        throw PreconditionError("--k/--l only apply to walk-ineq");
      }
      return cmd_check(o, out);
    }
    if (*matrix) return cmd_matrix(o, out);
    return cmd_search(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return usage_error;
}

}  // namespace chebwalk::cli
