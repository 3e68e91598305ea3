#pragma once

#include "chebwalk/graphs.hpp"
#include "chebwalk/inequalities.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace chebwalk {

/// Structural filters; an empty set means "all". Several filters may be
/// combined (e.g. connected + chemical) and must all pass.
enum class GraphClass : unsigned {
  connected = 1U << 0,
  tree = 1U << 1,
  forest = 1U << 2,
  bipartite = 1U << 3,
  chemical = 1U << 4,
  degree_balanced = 1U << 5,
};

struct ClassFilter {
  unsigned mask = 0;

  bool contains(GraphClass c) const { return (mask & static_cast<unsigned>(c)) != 0; }
  ClassFilter& add(GraphClass c) {
    mask |= static_cast<unsigned>(c);
    return *this;
  }
  bool operator==(const ClassFilter&) const = default;
};

/// Parses "all" or a comma-separated list such as "connected,chemical".
ClassFilter parse_class_filter(std::string_view text);
std::string to_string(const ClassFilter& f);

inline constexpr std::size_t undirected_cap = 8;
inline constexpr std::size_t directed_cap = 5;

struct EnumerationSpec {
  bool directed = false;
  std::size_t min_n = 1;
  std::size_t max_n = 1;
  ClassFilter filter;
  bool override_cap = false;
};

/// A contiguous slice of the enumeration: one vertex count and a fixed
/// assignment of the most significant adjacency bits.
struct Chunk {
  std::size_t n = 0;
  std::uint64_t prefix = 0;
  unsigned prefix_bits = 0;
};

using StructureVisitor = std::function<void(const Structure&)>;

/// Throws PreconditionError for an invalid range, a filter that does not
/// apply to the structure kind, or max_n above the cap without override.
void validate(const EnumerationSpec& spec);

/// Chunks in enumeration order (by n, then by adjacency code).
std::vector<Chunk> plan_chunks(const EnumerationSpec& spec);

void enumerate_chunk(const EnumerationSpec& spec, const Chunk& chunk,
                     const StructureVisitor& visit);

/// Every labeled simple graph (or loop-free digraph) with min_n..max_n
/// vertices passing the filter, once each, ordered by n and then by the
/// adjacency code (bit j set iff slot j is an edge). Undirected slots run
/// (0,1),(0,2),..,(0,n-1),(1,2),..; directed slots are the ordered pairs
/// (u,v), u != v, in row-major order.
void enumerate(const EnumerationSpec& spec, const StructureVisitor& visit);

std::size_t slot_count(std::size_t n, bool directed);
std::uint64_t adjacency_code(const Graph& g);
std::uint64_t adjacency_code(const Digraph& d);

enum class PredicateKind { zagreb_violation, zagreb_equality, walk_ineq_violation, ordering_census };

struct Predicate {
  PredicateKind kind = PredicateKind::zagreb_violation;
  unsigned k = 0;
  unsigned l = 0;
};

std::string_view to_string(PredicateKind p);
PredicateKind parse_predicate_kind(std::string_view text);

/// True for the predicates whose matches indicate a violated inequality.
bool is_violation_predicate(PredicateKind p);

struct SearchSpec {
  EnumerationSpec range;
  Predicate predicate;
  std::size_t limit = 10;
  unsigned threads = 0;  // 0: hardware concurrency
};

void validate(const SearchSpec& spec);

using Report = std::variant<ZagrebReport, InequalityReport>;

struct Witness {
  std::size_t n = 0;
  std::uint64_t code = 0;
  std::string graph;  // edge-list text
  Report report;
};

struct CountsByN {
  std::size_t n = 0;
  std::uint64_t examined = 0;
  std::uint64_t matched = 0;
};

struct SearchSummary {
  std::vector<CountsByN> by_n;
  // Class flags among matched undirected structures.
  std::map<std::string, std::uint64_t> matched_classes;
  // Applicability tallies for ordering_census.
  std::map<std::string, std::uint64_t> ordering;
  std::optional<std::size_t> smallest_match_n;
};

struct SearchResult {
  SearchSpec spec;
  std::uint64_t examined = 0;
  std::uint64_t matched = 0;
  std::vector<Witness> witnesses;  // first `limit` matches in enumeration order
  SearchSummary summary;
};

/// Called after every completed vertex count with running totals.
using ProgressCallback = std::function<void(std::size_t n, std::uint64_t examined, std::uint64_t matched)>;

SearchResult run_search(const SearchSpec& spec, const ProgressCallback& progress = {});

}  // namespace chebwalk
