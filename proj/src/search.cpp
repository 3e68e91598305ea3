#include "chebwalk/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>

namespace chebwalk {

namespace {

// Codes are 64-bit, which bounds n independently of the caps.
constexpr std::size_t max_code_bits = 63;
constexpr unsigned chunk_prefix_bits = 10;
constexpr std::size_t max_vertices = 16;

std::vector<Edge> slots_for(std::size_t n, bool directed) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
      if (u != v) slots.push_back({u, v});
    }
  }
  return slots;
}

struct State {
  std::array<std::uint8_t, max_vertices> comp{};
  std::array<std::uint8_t, max_vertices> colour{};
  std::array<std::uint8_t, max_vertices> out_deg{};  // degree when undirected
  std::array<std::uint8_t, max_vertices> in_deg{};
  std::size_t components = 0;
  std::size_t edges = 0;
  std::uint64_t code = 0;
};

// Depth-first walk over adjacency bits from the most significant slot
// down, "absent" before "present", so leaves appear in increasing code
// order. Forest, bipartite and max-degree constraints are closed under
// edge deletion and are pruned during descent; the rest are leaf filters.
class Walker {
 public:
  Walker(const EnumerationSpec& spec, std::size_t n, const StructureVisitor& visit)
      : spec_(spec), n_(n), slots_(slots_for(n, spec.directed)), visit_(visit) {
    const auto& f = spec.filter;
    tree_ = f.contains(GraphClass::tree);
    acyclic_ = tree_ || f.contains(GraphClass::forest);
    bipartite_ = f.contains(GraphClass::bipartite);
    chemical_ = f.contains(GraphClass::chemical);
    connected_ = f.contains(GraphClass::connected);
    balanced_ = f.contains(GraphClass::degree_balanced);
  }

  void run(const Chunk& chunk) {
    State s;
    for (std::size_t v = 0; v < n_; ++v) s.comp[v] = static_cast<std::uint8_t>(v);
    s.components = n_;

    const std::size_t total = slots_.size();
    const unsigned bits = chunk.prefix_bits;
    for (unsigned b = 0; b < bits; ++b) {
      const std::size_t slot = total - 1 - b;
      const bool present = (chunk.prefix >> (bits - 1 - b)) & 1U;
      if (present && !add(s, slot)) return;
    }
    const std::size_t remaining = total - bits;
    if (tree_ && s.edges + remaining + 1 < n_) return;
    descend(s, remaining);
  }

 private:
  bool add(State& s, std::size_t slot) const {
    const auto [u, v] = slots_[slot];
    if (chemical_ && (s.out_deg[u] >= 4 || s.out_deg[v] >= 4)) return false;
    const bool same = s.comp[u] == s.comp[v];
    if (acyclic_ && same) return false;
    if (bipartite_ && same && s.colour[u] == s.colour[v]) return false;
    if (!same) {
      const std::uint8_t from = s.comp[v];
      const bool flip = s.colour[u] == s.colour[v];
      for (std::size_t w = 0; w < n_; ++w) {
        if (s.comp[w] == from) {
          s.comp[w] = s.comp[u];
          if (flip) s.colour[w] ^= 1U;
        }
      }
      --s.components;
    }
    ++s.out_deg[u];
    if (spec_.directed) ++s.in_deg[v];
    else ++s.out_deg[v];
    ++s.edges;
    s.code |= std::uint64_t{1} << slot;
    return true;
  }

  // Slots [0, remaining) are still undecided.
  void descend(const State& s, std::size_t remaining) {
    if (remaining == 0) {
      leaf(s);
      return;
    }
    const std::size_t slot = remaining - 1;
    if (!tree_ || s.edges + slot + 1 >= n_) descend(s, slot);
    State with = s;
    if (add(with, slot)) descend(with, slot);
  }

  void leaf(const State& s) {
    if (tree_ && s.edges + 1 != n_) return;
    if ((connected_ || tree_) && s.components != 1) return;
    if (balanced_ && s.in_deg != s.out_deg) return;

    std::vector<Edge> edges;
    edges.reserve(s.edges);
    for (std::size_t j = 0; j < slots_.size(); ++j)
      if ((s.code >> j) & 1U) edges.push_back(slots_[j]);
    if (spec_.directed) {
      const Structure st{Digraph(n_, std::move(edges))};
      visit_(st);
    } else {
      const Structure st{Graph(n_, std::move(edges))};
      visit_(st);
    }
  }

  const EnumerationSpec& spec_;
  std::size_t n_;
  std::vector<Edge> slots_;
  const StructureVisitor& visit_;
  bool tree_ = false, acyclic_ = false, bipartite_ = false, chemical_ = false;
  bool connected_ = false, balanced_ = false;
};

struct ClassName {
  GraphClass value;
  std::string_view name;
};

constexpr std::array<ClassName, 6> class_names{{
    {GraphClass::connected, "connected"},
    {GraphClass::tree, "tree"},
    {GraphClass::forest, "forest"},
    {GraphClass::bipartite, "bipartite"},
    {GraphClass::chemical, "chemical"},
    {GraphClass::degree_balanced, "degree_balanced"},
}};

}  // namespace

ClassFilter parse_class_filter(std::string_view text) {
  ClassFilter f;
  if (text == "all") return f;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string name(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    std::replace(name.begin(), name.end(), '-', '_');
    auto it = std::find_if(class_names.begin(), class_names.end(),
                           [&](const ClassName& c) { return c.name == name; });
    if (it == class_names.end()) throw PreconditionError("unknown class filter '" + name + "'");
    f.add(it->value);
  }
  return f;
}

std::string to_string(const ClassFilter& f) {
  if (f.mask == 0) return "all";
  std::string out;
  for (const auto& c : class_names) {
    if (!f.contains(c.value)) continue;
    if (!out.empty()) out += ',';
    out += c.name;
  }
  return out;
}

std::size_t slot_count(std::size_t n, bool directed) {
  return directed ? n * (n - (n > 0 ? 1 : 0)) : n * (n - (n > 0 ? 1 : 0)) / 2;
}

void validate(const EnumerationSpec& spec) {
  if (spec.min_n < 1 || spec.min_n > spec.max_n) {
    throw PreconditionError("vertex range must satisfy 1 <= min-n <= max-n");
  }
  const std::size_t cap = spec.directed ? directed_cap : undirected_cap;
  if (spec.max_n > cap && !spec.override_cap) {
    throw PreconditionError("max-n " + std::to_string(spec.max_n) + " exceeds the cap of " +
                            std::to_string(cap) + " (use --override-cap)");
  }
  if (slot_count(spec.max_n, spec.directed) > max_code_bits || spec.max_n > max_vertices) {
    throw PreconditionError("max-n " + std::to_string(spec.max_n) +
                            " is beyond the 64-bit adjacency encoding");
  }
  const auto& f = spec.filter;
  if (spec.directed) {
    for (auto c : {GraphClass::tree, GraphClass::forest, GraphClass::bipartite, GraphClass::chemical}) {
      if (f.contains(c)) throw PreconditionError("class filter applies to undirected graphs only");
    }
  } else if (f.contains(GraphClass::degree_balanced)) {
    throw PreconditionError("degree_balanced applies to directed graphs only");
  }
}

std::vector<Chunk> plan_chunks(const EnumerationSpec& spec) {
  validate(spec);
  std::vector<Chunk> chunks;
  for (std::size_t n = spec.min_n; n <= spec.max_n; ++n) {
    const auto bits = static_cast<unsigned>(std::min<std::size_t>(slot_count(n, spec.directed), chunk_prefix_bits));
    for (std::uint64_t prefix = 0; prefix < (std::uint64_t{1} << bits); ++prefix) {
      chunks.push_back({n, prefix, bits});
    }
  }
  return chunks;
}

void enumerate_chunk(const EnumerationSpec& spec, const Chunk& chunk, const StructureVisitor& visit) {
  Walker(spec, chunk.n, visit).run(chunk);
}

void enumerate(const EnumerationSpec& spec, const StructureVisitor& visit) {
  for (const auto& chunk : plan_chunks(spec)) enumerate_chunk(spec, chunk, visit);
}

namespace {

std::uint64_t code_of(std::size_t n, std::span<const Edge> edges, bool directed) {
  const auto slots = slots_for(n, directed);
  std::uint64_t code = 0;
  for (auto e : edges) {
    if (!directed && e.u > e.v) std::swap(e.u, e.v);
    auto it = std::find(slots.begin(), slots.end(), e);
    if (it == slots.end()) throw std::invalid_argument("edge has no adjacency slot (loop)");
    const auto bit = std::uint64_t{1} << (it - slots.begin());
    if (code & bit) throw std::invalid_argument("parallel edges have no adjacency code");
    code |= bit;
  }
  return code;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) { return code_of(g.order(), g.edges(), false); }
std::uint64_t adjacency_code(const Digraph& d) { return code_of(d.order(), d.arcs(), true); }

std::string_view to_string(PredicateKind p) {
  switch (p) {
    case PredicateKind::zagreb_violation: return "zagreb_violation";
    case PredicateKind::zagreb_equality: return "zagreb_equality";
    case PredicateKind::walk_ineq_violation: return "walk_ineq_violation";
    case PredicateKind::ordering_census: return "ordering_census";
  }
  return "";
}

PredicateKind parse_predicate_kind(std::string_view text) {
  std::string name(text);
  std::replace(name.begin(), name.end(), '-', '_');
  for (auto p : {PredicateKind::zagreb_violation, PredicateKind::zagreb_equality,
                 PredicateKind::walk_ineq_violation, PredicateKind::ordering_census}) {
    if (to_string(p) == name) return p;
  }
  throw PreconditionError("unknown predicate '" + std::string(text) + "'");
}

bool is_violation_predicate(PredicateKind p) {
  return p == PredicateKind::zagreb_violation || p == PredicateKind::walk_ineq_violation;
}

void validate(const SearchSpec& spec) {
  validate(spec.range);
  const auto kind = spec.predicate.kind;
  if ((kind == PredicateKind::zagreb_violation || kind == PredicateKind::zagreb_equality) &&
      spec.range.directed) {
    throw PreconditionError("Zagreb predicates apply to undirected graphs only");
  }
}

namespace {

struct ChunkResult {
  std::uint64_t examined = 0;
  std::uint64_t matched = 0;
  std::vector<Witness> witnesses;
  std::map<std::string, std::uint64_t> matched_classes;
  std::map<std::string, std::uint64_t> ordering;
};

void tally_classes(const Graph& g, std::map<std::string, std::uint64_t>& tally) {
  const auto f = classify(g);
  const std::pair<const char*, bool> flags[] = {
      {"connected", f.connected}, {"tree", f.tree},
      {"forest", f.forest},       {"bipartite", f.bipartite},
      {"complete_bipartite", f.complete_bipartite},
      {"regular", f.regular},     {"chemical", f.chemical},
  };
  for (const auto& [name, on] : flags)
    if (on) ++tally[name];
}

std::string_view census_key(Applicability a) {
  switch (a) {
    case Applicability::le: return "similarly_only";
    case Applicability::ge: return "conversely_only";
    case Applicability::both: return "both";
    case Applicability::none: return "neither";
  }
  return "neither";
}

ChunkResult search_chunk(const SearchSpec& spec, const Chunk& chunk) {
  ChunkResult out;
  const auto& pred = spec.predicate;
  enumerate_chunk(spec.range, chunk, [&](const Structure& s) {
    ++out.examined;
    std::optional<Report> hit;
    switch (pred.kind) {
      case PredicateKind::zagreb_violation:
      case PredicateKind::zagreb_equality: {
        const auto& g = std::get<Graph>(s);
        if (g.size() == 0) break;
        auto r = zagreb_inequality(g);
        const bool match = pred.kind == PredicateKind::zagreb_violation ? !r.holds : r.equality;
        if (match) hit = std::move(r);
        break;
      }
      case PredicateKind::walk_ineq_violation: {
        auto r = digraph_walk_inequality(s, pred.k, pred.l);
        if (r.applicable != Applicability::none && !r.holds) hit = std::move(r);
        break;
      }
      case PredicateKind::ordering_census: {
        auto r = digraph_walk_inequality(s, pred.k, pred.l);
        ++out.ordering[std::string(census_key(r.applicable))];
        if (r.applicable != Applicability::none) hit = std::move(r);
        break;
      }
    }
    if (!hit) return;
    ++out.matched;
    if (const auto* g = std::get_if<Graph>(&s)) tally_classes(*g, out.matched_classes);
    if (out.witnesses.size() < spec.limit) {
      Witness w;
      w.n = chunk.n;
      w.code = std::visit([](const auto& x) { return adjacency_code(x); }, s);
      w.graph = format_graph(s);
      w.report = std::move(*hit);
      out.witnesses.push_back(std::move(w));
    }
  });
  return out;
}

}  // namespace

SearchResult run_search(const SearchSpec& spec, const ProgressCallback& progress) {
  validate(spec);
  SearchResult result;
  result.spec = spec;

  const auto chunks = plan_chunks(spec.range);
  unsigned threads = spec.threads ? spec.threads : std::max(1U, std::thread::hardware_concurrency());

  std::size_t begin = 0;
  while (begin < chunks.size()) {
    const std::size_t n = chunks[begin].n;
    std::size_t end = begin;
    while (end < chunks.size() && chunks[end].n == n) ++end;

    std::vector<ChunkResult> parts(end - begin);
    std::atomic<std::size_t> next{begin};
    auto worker = [&] {
      for (std::size_t i = next++; i < end; i = next++) parts[i - begin] = search_chunk(spec, chunks[i]);
    };
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, end - begin));
    if (count <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    // Merge in chunk order so output does not depend on scheduling.
    CountsByN counts{n, 0, 0};
    for (auto& part : parts) {
      counts.examined += part.examined;
      counts.matched += part.matched;
      for (auto& w : part.witnesses) {
        if (result.witnesses.size() < spec.limit) result.witnesses.push_back(std::move(w));
      }
      for (const auto& [k, v] : part.matched_classes) result.summary.matched_classes[k] += v;
      for (const auto& [k, v] : part.ordering) result.summary.ordering[k] += v;
    }
    result.examined += counts.examined;
    result.matched += counts.matched;
    if (counts.matched > 0 && !result.summary.smallest_match_n) result.summary.smallest_match_n = n;
    result.summary.by_n.push_back(counts);
    if (progress) progress(n, result.examined, result.matched);
    begin = end;
  }
  return result;
}

}  // namespace chebwalk
