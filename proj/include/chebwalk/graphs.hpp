#pragma once

#include "chebwalk/matrices.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace chebwalk {

using Vertex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Undirected multigraph without loops. Vertices are 0..n-1.
/// Parallel edges are kept as repeated entries of the edge list.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::vector<Edge> edges = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Neighbours with multiplicity: a double edge lists the neighbour twice.
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }

  bool has_parallel_edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;  // stored with u < v, input order preserved
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Directed multigraph; loops are permitted.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n, std::vector<Edge> arcs = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  std::span<const Edge> arcs() const noexcept { return arcs_; }

  std::span<const Vertex> successors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> predecessors(Vertex v) const { return in_[v]; }

  bool operator==(const Digraph& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

using Structure = std::variant<Graph, Digraph>;

struct GraphClassFlags {
  bool connected = false;
  bool tree = false;
  bool forest = false;
  bool bipartite = false;
  bool complete_bipartite = false;
  bool regular = false;
  bool chemical = false;
  bool operator==(const GraphClassFlags&) const = default;
};

struct InOutDegrees {
  std::vector<std::size_t> in;
  std::vector<std::size_t> out;
};

/// Parses the edge-list format:
///   undirected|directed <n> <m>
///   <u> <v>            (m lines, repeats mean multiplicity)
/// '#' comment lines and blank lines are skipped.
Structure parse_graph(std::string_view text);

std::string format_graph(const Graph& g);
std::string format_graph(const Digraph& d);
std::string format_graph(const Structure& s);

std::vector<std::size_t> degree_sequence(const Graph& g);

/// S_i: sum of d(v_j) over the edges {v_i, v_j}, counted with multiplicity.
std::vector<std::size_t> degree_sum_sequence(const Graph& g);

InOutDegrees in_out_degrees(const Digraph& d);

GraphClassFlags classify(const Graph& g);

/// Connectivity of the underlying undirected structure (n >= 1).
bool is_weakly_connected(const Digraph& d);

/// din(v) == dout(v) for every v. Connectivity is not required.
bool is_degree_balanced(const Digraph& d);

/// Replaces every edge {u,v} by a new vertex x and edges {u,x}, {x,v}.
/// New vertices are numbered n, n+1, ... in edge order.
Graph subdivision(const Graph& g);

RationalMatrix adjacency_matrix(const Graph& g);
RationalMatrix adjacency_matrix(const Digraph& d);
RationalMatrix adjacency_matrix(const Structure& s);

IntegerMatrix integer_adjacency_matrix(const Graph& g);
IntegerMatrix integer_adjacency_matrix(const Digraph& d);

}  // namespace chebwalk
