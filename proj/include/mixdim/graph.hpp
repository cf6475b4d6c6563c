#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixdim {

// Vertex subsets are single machine words, so graphs are capped at 62
// vertices (also leaves the graph6 short form exactly representable).
inline constexpr int kMaxVertices = 62;

namespace detail {

inline int popcount(std::uint64_t x) noexcept { return __builtin_popcountll(x); }
inline int lowest_bit(std::uint64_t x) noexcept { return __builtin_ctzll(x); }
inline constexpr std::uint64_t bit(int v) noexcept { return std::uint64_t{1} << v; }

// Visits the set bits of `mask` in ascending order.
template <typename F>
inline void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask) {
    f(lowest_bit(mask));
    mask &= mask - 1;
  }
}

// Connectivity over raw adjacency rows, no allocation. Frontier expansion
// is one OR per vertex per layer.
inline bool rows_connected(const std::uint64_t* rows, int n) noexcept {
  if (n <= 1) return true;
  std::uint64_t reached = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for_each_bit(frontier, [&](int v) { next |= rows[v]; });
    frontier = next & ~reached;
    reached |= frontier;
  }
  return popcount(reached) == n;
}

inline int rows_max_degree(const std::uint64_t* rows, int n) noexcept {
  int d = 0;
  for (int v = 0; v < n; ++v) d = std::max(d, popcount(rows[v]));
  return d;
}

}  // namespace detail

// Canonical undirected edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("edge endpoints must differ");
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Immutable simple undirected graph; one adjacency bitmask row per vertex.
class Graph {
 public:
  Graph(int n, std::vector<std::uint64_t> adj) : n_(n), adj_(std::move(adj)) {
    if (n_ < 1 || n_ > kMaxVertices)
      throw std::invalid_argument("vertex count must be in [1, 62]");
    if (static_cast<int>(adj_.size()) != n_)
      throw std::invalid_argument("adjacency row count does not match order");
    const std::uint64_t universe = all_vertices();
    for (int v = 0; v < n_; ++v) {
      if (adj_[v] & ~universe)
        throw std::invalid_argument("adjacency bit out of range");
      if (adj_[v] & detail::bit(v))
        throw std::invalid_argument("self-loops are not allowed");
      detail::for_each_bit(adj_[v], [&](int u) {
        if (!(adj_[u] & detail::bit(v)))
          throw std::invalid_argument("adjacency is not symmetric");
      });
    }
  }

  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("vertex count must be in [1, 62]");
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& [a, b] : edges) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (a == b) throw std::invalid_argument("self-loops are not allowed");
      adj[a] |= detail::bit(b);
      adj[b] |= detail::bit(a);
    }
    return Graph(n, std::move(adj));
  }

  int order() const noexcept { return n_; }
  std::uint64_t neighbors(int v) const { return adj_[check(v)]; }
  std::uint64_t closed_neighbors(int v) const { return adj_[check(v)] | detail::bit(v); }
  bool has_edge(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1; }
  int degree(int v) const { return detail::popcount(adj_[check(v)]); }
  const std::uint64_t* rows() const noexcept { return adj_.data(); }
  std::uint64_t all_vertices() const noexcept { return detail::bit(n_) - 1; }

  int edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += detail::popcount(adj_[v]);
    return twice / 2;
  }

  int min_degree() const noexcept {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }
  int max_degree() const noexcept { return detail::rows_max_degree(adj_.data(), n_); }

  // Edges in lexicographic (u, then v) order; this is the canonical
  // enumeration order used everywhere downstream.
  std::vector<Edge> edge_list() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
      detail::for_each_bit(adj_[u] & ~(detail::bit(u + 1) - 1),
                           [&](int v) { out.push_back(Edge{u, v}); });
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    return v;
  }

  int n_;
  std::vector<std::uint64_t> adj_;
};

inline bool is_connected(const Graph& g) noexcept {
  return detail::rows_connected(g.rows(), g.order());
}

// Either a vertex or a canonical edge; the union these graphs' resolving
// sets must separate. Vertices order before edges, edges lexicographically.
class MixedElement {
 public:
  static MixedElement vertex(int i) { return MixedElement(i, i); }
  static MixedElement edge(Edge e) {
    if (e.u >= e.v) throw std::invalid_argument("edge must satisfy u < v");
    return MixedElement(e.u, e.v);
  }

  bool is_vertex() const noexcept { return u_ == v_; }
  bool is_edge() const noexcept { return u_ != v_; }
  int vertex_index() const {
    if (!is_vertex()) throw std::logic_error("not a vertex element");
    return u_;
  }
  Edge edge_value() const {
    if (!is_edge()) throw std::logic_error("not an edge element");
    return Edge{u_, v_};
  }

  std::string to_string() const {
    if (is_vertex()) return "v" + std::to_string(u_);
    return "e(" + std::to_string(u_) + "," + std::to_string(v_) + ")";
  }

  friend constexpr bool operator==(const MixedElement&, const MixedElement&) = default;
  friend constexpr auto operator<=>(const MixedElement& a, const MixedElement& b) {
    if (auto c = (a.is_edge() <=> b.is_edge()); c != 0) return c;
    if (auto c = (a.u_ <=> b.u_); c != 0) return c;
    return a.v_ <=> b.v_;
  }

 private:
  MixedElement(int u, int v) : u_(u), v_(v) {}
  int u_;
  int v_;
};

// Vertices first, then edges in lexicographic order.
inline std::vector<MixedElement> mixed_elements(const Graph& g) {
  std::vector<MixedElement> out;
  out.reserve(g.order() + g.edge_count());
  for (int v = 0; v < g.order(); ++v) out.push_back(MixedElement::vertex(v));
  for (const Edge& e : g.edge_list()) out.push_back(MixedElement::edge(e));
  return out;
}

// All-pairs hop distances. 8-bit entries keep the table small during
// subset search; any finite distance fits (diameter <= 61).
class DistanceData {
 public:
  DistanceData(int n, std::vector<std::uint8_t> dist)
      : n_(n), dist_(std::move(dist)) {}

  int order() const noexcept { return n_; }
  int operator()(int u, int v) const noexcept { return dist_[u * n_ + v]; }
  const std::uint8_t* row(int u) const noexcept { return dist_.data() + u * n_; }

 private:
  int n_;
  std::vector<std::uint8_t> dist_;
};

// BFS from every vertex with bit-parallel layer expansion.
inline DistanceData distance_matrix(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  const int n = g.order();
  std::vector<std::uint8_t> dist(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    std::uint64_t seen = detail::bit(s);
    std::uint64_t frontier = seen;
    std::uint8_t d = 0;
    while (frontier) {
      detail::for_each_bit(frontier, [&](int v) { dist[s * n + v] = d; });
      std::uint64_t next = 0;
      detail::for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & ~seen;
      seen |= frontier;
      ++d;
    }
  }
  return DistanceData(n, std::move(dist));
}

// Distance from a mixed element to a vertex: plain hop distance for a
// vertex element, min over the two endpoints for an edge element.
inline int mixed_distance(const DistanceData& d, const MixedElement& x, int v) {
  if (x.is_vertex()) return d(x.vertex_index(), v);
  const Edge e = x.edge_value();
  return std::min(d(e.u, v), d(e.v, v));
}

// --- small vertex-set helpers -------------------------------------------

inline std::vector<int> set_to_vector(std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(detail::popcount(mask));
  detail::for_each_bit(mask, [&](int v) { out.push_back(v); });
  return out;
}

inline std::uint64_t set_from_vector(std::span<const int> vs) {
  std::uint64_t mask = 0;
  for (int v : vs) {
    if (v < 0 || v >= 64) throw std::invalid_argument("vertex out of range");
    mask |= detail::bit(v);
  }
  return mask;
}

}  // namespace mixdim
