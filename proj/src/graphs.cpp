#include "chebwalk/graphs.hpp"

#include "text_lines.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace chebwalk {

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n) {
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("loops are not allowed in undirected graphs");
    if (e.u > e.v) std::swap(e.u, e.v);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
}

bool Graph::has_parallel_edges() const {
  std::vector<Edge> sorted(edges_.begin(), edges_.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

Digraph::Digraph(std::size_t n, std::vector<Edge> arcs)
    : n_(n), arcs_(std::move(arcs)), out_(n), in_(n) {
  for (const auto& a : arcs_) {
    if (a.u >= n_ || a.v >= n_) throw std::invalid_argument("arc endpoint out of range");
    out_[a.u].push_back(a.v);
    in_[a.v].push_back(a.u);
  }
}

Structure parse_graph(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty graph document");

  const auto& head = lines.front();
  auto header = detail::split_words(head.text);
  if (header.size() != 3 || (header[0] != "undirected" && header[0] != "directed")) {
    throw ParseError("line " + std::to_string(head.number) +
                     ": expected header 'undirected|directed <n> <m>'");
  }
  const bool directed = header[0] == "directed";
  const std::size_t n = detail::parse_count(header[1], head.number, "vertex count");
  const std::size_t m = detail::parse_count(header[2], head.number, "edge count");
  if (lines.size() - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto words = detail::split_words(line.text);
    if (words.size() != 2) {
      throw ParseError("line " + std::to_string(line.number) + ": expected '<u> <v>'");
    }
    Vertex u = detail::parse_count(words[0], line.number, "vertex");
    Vertex v = detail::parse_count(words[1], line.number, "vertex");
    if (u >= n || v >= n) {
      throw ParseError("line " + std::to_string(line.number) + ": vertex index out of range (n=" +
                       std::to_string(n) + ")");
    }
    if (!directed && u == v) {
      throw ParseError("line " + std::to_string(line.number) + ": loop in undirected graph");
    }
    edges.push_back({u, v});
  }
  if (directed) return Digraph(n, std::move(edges));
  return Graph(n, std::move(edges));
}

namespace {

std::string format_edges(const char* kind, std::size_t n, std::span<const Edge> edges) {
  std::ostringstream out;
  out << kind << ' ' << n << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// Component label per vertex over an undirected neighbour relation.
template <class Neighbours>
std::vector<std::size_t> component_labels(std::size_t n, Neighbours&& neighbours,
                                          std::size_t& count) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != unset) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      neighbours(v, [&](Vertex w) {
        if (label[w] == unset) {
          label[w] = count;
          stack.push_back(w);
        }
      });
    }
    ++count;
  }
  return label;
}

}  // namespace

std::string format_graph(const Graph& g) { return format_edges("undirected", g.order(), g.edges()); }
std::string format_graph(const Digraph& d) { return format_edges("directed", d.order(), d.arcs()); }
std::string format_graph(const Structure& s) {
  return std::visit([](const auto& x) { return format_graph(x); }, s);
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (const auto& e : g.edges()) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

std::vector<std::size_t> degree_sum_sequence(const Graph& g) {
  auto d = degree_sequence(g);
  std::vector<std::size_t> s(g.order());
  for (const auto& e : g.edges()) {
    s[e.u] += d[e.v];
    s[e.v] += d[e.u];
  }
  return s;
}

InOutDegrees in_out_degrees(const Digraph& d) {
  InOutDegrees deg{std::vector<std::size_t>(d.order()), std::vector<std::size_t>(d.order())};
  for (const auto& a : d.arcs()) {
    ++deg.out[a.u];
    ++deg.in[a.v];
  }
  return deg;
}

GraphClassFlags classify(const Graph& g) {
  GraphClassFlags f;
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  const bool simple = !g.has_parallel_edges();
  const auto deg = degree_sequence(g);

  std::size_t components = 0;
  auto label = component_labels(
      n, [&](Vertex v, auto&& visit) { for (Vertex w : g.neighbours(v)) visit(w); },
      components);
  (void)label;

  f.connected = n >= 1 && components == 1;
  f.forest = simple && m + components == n;
  f.tree = f.connected && f.forest;

  // Two-colouring by BFS.
  std::vector<int> colour(n, -1);
  f.bipartite = true;
  std::size_t side_a = 0;
  for (Vertex s = 0; s < n && f.bipartite; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty() && f.bipartite) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbours(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push(w);
        } else if (colour[w] == colour[v]) {
          f.bipartite = false;
          break;
        }
      }
    }
  }
  if (f.bipartite) side_a = static_cast<std::size_t>(std::count(colour.begin(), colour.end(), 0));

  // A connected bipartite graph has a unique bipartition.
  f.complete_bipartite = simple && f.connected && f.bipartite && n >= 2 &&
                         m == side_a * (n - side_a);
  f.regular = std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>{}) == deg.end();
  f.chemical = simple && std::all_of(deg.begin(), deg.end(), [](auto x) { return x <= 4; });
  return f;
}

bool is_weakly_connected(const Digraph& d) {
  std::size_t components = 0;
  component_labels(
      d.order(),
      [&](Vertex v, auto&& visit) {
        for (Vertex w : d.successors(v)) visit(w);
        for (Vertex w : d.predecessors(v)) visit(w);
      },
      components);
  return d.order() >= 1 && components == 1;
}

bool is_degree_balanced(const Digraph& d) {
  auto deg = in_out_degrees(d);
  return deg.in == deg.out;
}

Graph subdivision(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  Vertex next = g.order();
  for (const auto& e : g.edges()) {
    edges.push_back({e.u, next});
    edges.push_back({e.v, next});
    ++next;
  }
  return Graph(next, std::move(edges));
}

namespace {

template <class T>
Matrix<T> undirected_adjacency(const Graph& g) {
  Matrix<T> a(g.order());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) += 1;
    a(e.v, e.u) += 1;
  }
  return a;
}

template <class T>
Matrix<T> directed_adjacency(const Digraph& d) {
  Matrix<T> a(d.order());
  for (const auto& e : d.arcs()) a(e.u, e.v) += 1;
  return a;
}

}  // namespace

RationalMatrix adjacency_matrix(const Graph& g) { return undirected_adjacency<Rational>(g); }
RationalMatrix adjacency_matrix(const Digraph& d) { return directed_adjacency<Rational>(d); }
RationalMatrix adjacency_matrix(const Structure& s) {
  return std::visit([](const auto& x) { return adjacency_matrix(x); }, s);
}

IntegerMatrix integer_adjacency_matrix(const Graph& g) { return undirected_adjacency<BigInt>(g); }
IntegerMatrix integer_adjacency_matrix(const Digraph& d) { return directed_adjacency<BigInt>(d); }

}  // namespace chebwalk
