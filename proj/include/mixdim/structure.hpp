#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mixdim/graph.hpp"

namespace mixdim {

namespace detail {

// Smallest neighbor y of v with N[v] subset of N[y], or -1. Works on raw
// rows so enumeration loops can call it without building a Graph.
inline int rows_maximal_neighbor(const std::uint64_t* rows, int v) noexcept {
  const std::uint64_t closed_v = rows[v] | bit(v);
  std::uint64_t candidates = rows[v];
  while (candidates) {
    const int y = lowest_bit(candidates);
    candidates &= candidates - 1;
    if ((closed_v & ~(rows[y] | bit(y))) == 0) return y;
  }
  return -1;
}

inline bool rows_all_have_maximal_neighbor(const std::uint64_t* rows, int n) noexcept {
  for (int v = 0; v < n; ++v)
    if (rows_maximal_neighbor(rows, v) < 0) return false;
  return true;
}

}  // namespace detail

// A maximal neighbor of v is a neighbor adjacent to every other neighbor
// of v, i.e. N[v] subset of N[y]. Ties break to the smallest index.
inline std::optional<int> maximal_neighbor_witness(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex index out of range");
  const int y = detail::rows_maximal_neighbor(g.rows(), v);
  if (y < 0) return std::nullopt;
  return y;
}

inline bool all_have_maximal_neighbor(const Graph& g) {
  return detail::rows_all_have_maximal_neighbor(g.rows(), g.order());
}

// Vertices of degree n-1, as a set mask.
inline std::uint64_t universal_vertices(const Graph& g) {
  std::uint64_t out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out |= detail::bit(v);
  return out;
}

struct BlockDecomposition {
  std::uint64_t cut_vertices = 0;
  std::vector<std::uint64_t> blocks;  // vertex sets, in DFS completion order
};

// Single lowpoint DFS; blocks are collected from an explicit edge stack.
inline BlockDecomposition cut_vertices_and_blocks(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  const int n = g.order();
  BlockDecomposition out;
  if (n == 1) return out;

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    std::uint64_t pending;  // neighbors not yet explored
    int children = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({0, -1, g.neighbors(0)});
  disc[0] = low[0] = timer++;

  auto pop_block = [&](Edge top) {
    std::uint64_t block = 0;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block |= detail::bit(e.u) | detail::bit(e.v);
      if (e == top) break;
    }
    out.blocks.push_back(block);
  };

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.pending) {
      const int w = detail::lowest_bit(f.pending);
      f.pending &= f.pending - 1;
      if (w == f.parent) {
        f.parent = -1;  // skip the tree edge back exactly once
        continue;
      }
      if (disc[w] < 0) {
        edge_stack.push_back(make_edge(f.v, w));
        ++f.children;
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, g.neighbors(w)});
      } else if (disc[w] < disc[f.v]) {
        edge_stack.push_back(make_edge(f.v, w));
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) out.cut_vertices |= detail::bit(done.v);
        break;
      }
      Frame& up = stack.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (low[done.v] >= disc[up.v]) {
        if (stack.size() > 1) out.cut_vertices |= detail::bit(up.v);
        pop_block(make_edge(up.v, done.v));
      }
    }
  }
  return out;
}

// Every block induces a complete subgraph.
inline bool is_block_graph(const Graph& g) {
  const auto bd = cut_vertices_and_blocks(g);
  for (std::uint64_t block : bd.blocks) {
    bool complete = true;
    detail::for_each_bit(block, [&](int v) {
      if ((g.closed_neighbors(v) & block) != block) complete = false;
    });
    if (!complete) return false;
  }
  return true;
}

inline bool is_chemical(const Graph& g) { return g.max_degree() <= 4; }

// Neighborhood induces a clique.
inline bool is_simplicial(const Graph& g, int v) {
  const std::uint64_t nb = g.neighbors(v);
  bool clique = true;
  detail::for_each_bit(nb, [&](int u) {
    if ((nb & ~g.closed_neighbors(u)) != 0) clique = false;
  });
  return clique;
}

struct StructureReport {
  int min_degree = 0;
  int max_degree = 0;
  std::uint64_t universal = 0;
  std::uint64_t cut_vertices = 0;
  int zeta = 0;
  std::vector<std::uint64_t> blocks;
  bool is_block_graph = false;
  bool is_chemical = false;
  std::vector<std::optional<int>> maximal_neighbor_of;
};

inline StructureReport analyze_structure(const Graph& g) {
  StructureReport r;
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  r.universal = universal_vertices(g);
  auto bd = cut_vertices_and_blocks(g);
  r.cut_vertices = bd.cut_vertices;
  r.zeta = detail::popcount(bd.cut_vertices);
  r.blocks = std::move(bd.blocks);
  r.is_block_graph = mixdim::is_block_graph(g);
  r.is_chemical = mixdim::is_chemical(g);
  r.maximal_neighbor_of.reserve(g.order());
  for (int v = 0; v < g.order(); ++v)
    r.maximal_neighbor_of.push_back(maximal_neighbor_witness(g, v));
  return r;
}

}  // namespace mixdim
