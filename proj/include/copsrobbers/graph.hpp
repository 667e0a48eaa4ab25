#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "copsrobbers/errors.hpp"

namespace copsrobbers {

using Vertex = std::int32_t;
using Hops = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sentinel distance for unreachable targets.
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

namespace detail {

// Compressed sparse row adjacency with sorted, duplicate-free rows.
struct Csr {
  std::vector<std::size_t> offsets{0};
  std::vector<Vertex> targets;

  static Csr build(std::size_t n, std::vector<Edge> arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    Csr csr;
    csr.offsets.assign(n + 1, 0);
    for (const auto& [u, v] : arcs) ++csr.offsets[static_cast<std::size_t>(u) + 1];
    std::partial_sum(csr.offsets.begin(), csr.offsets.end(), csr.offsets.begin());
    csr.targets.reserve(arcs.size());
    for (const auto& arc : arcs) csr.targets.push_back(arc.second);
    return csr;
  }

  std::span<const Vertex> row(Vertex v) const {
    auto b = offsets[static_cast<std::size_t>(v)];
    auto e = offsets[static_cast<std::size_t>(v) + 1];
    return {targets.data() + b, e - b};
  }

  bool contains(Vertex u, Vertex v) const {
    auto r = row(u);
    return std::binary_search(r.begin(), r.end(), v);
  }
};

inline void check_vertex(std::size_t n, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    throw InvalidInput("vertex id " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
}

}  // namespace detail

// Simple undirected graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Parallel edges are merged; self-loops and out-of-range ids are rejected.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<Edge> arcs;
    arcs.reserve(2 * edges.size());
    for (const auto& [u, v] : edges) {
      detail::check_vertex(n, u);
      detail::check_vertex(n, v);
      if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
    }
    Graph g;
    g.n_ = n;
    g.adj_ = detail::Csr::build(n, std::move(arcs));
    g.connected_ = g.compute_connected();
    return g;
  }

  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    return from_edges(n, std::span<const Edge>(edges));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return adj_.targets.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.row(v); }
  // Uniform access shared with Digraph.
  std::span<const Vertex> out_neighbors(Vertex v) const { return adj_.row(v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return adj_.row(v); }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const { return adj_.contains(u, v); }
  bool connected() const noexcept { return connected_; }

  std::size_t min_degree() const {
    std::size_t d = n_ == 0 ? 0 : std::numeric_limits<std::size_t>::max();
    for (std::size_t v = 0; v < n_; ++v) d = std::min(d, degree(static_cast<Vertex>(v)));
    return d;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (std::size_t v = 0; v < n_; ++v) d = std::max(d, degree(static_cast<Vertex>(v)));
    return d;
  }

  // Every regular graph has a single degree; returns -1 otherwise.
  long regular_degree() const {
    if (n_ == 0) return 0;
    return min_degree() == max_degree() ? static_cast<long>(min_degree()) : -1;
  }

  // Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (std::size_t u = 0; u < n_; ++u)
      for (Vertex v : neighbors(static_cast<Vertex>(u)))
        if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_.offsets == b.adj_.offsets && a.adj_.targets == b.adj_.targets;
  }

 private:
  bool compute_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n_;
  }

  std::size_t n_ = 0;
  detail::Csr adj_;
  bool connected_ = true;
};

// Simple digraph (no self-loops, no parallel arcs). Immutable after construction.
class Digraph {
 public:
  Digraph() = default;

  static Digraph from_arcs(std::size_t n, std::span<const Edge> arcs) {
    std::vector<Edge> out;
    std::vector<Edge> in;
    out.reserve(arcs.size());
    in.reserve(arcs.size());
    for (const auto& [u, v] : arcs) {
      detail::check_vertex(n, u);
      detail::check_vertex(n, v);
      if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
      out.emplace_back(u, v);
      in.emplace_back(v, u);
    }
    Digraph d;
    d.n_ = n;
    d.out_ = detail::Csr::build(n, std::move(out));
    d.in_ = detail::Csr::build(n, std::move(in));
    d.in_digon_.assign(n, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (Vertex v : d.out_neighbors(static_cast<Vertex>(u)))
        if (d.out_.contains(v, static_cast<Vertex>(u))) {
          d.in_digon_[u] = 1;
          if (static_cast<Vertex>(u) < v) d.digons_.emplace_back(static_cast<Vertex>(u), v);
        }
    d.weakly_connected_ = d.underlying().connected();
    return d;
  }

  static Digraph from_arcs(std::size_t n, const std::vector<Edge>& arcs) {
    return from_arcs(n, std::span<const Edge>(arcs));
  }

  // Every undirected edge becomes a digon.
  static Digraph bidirected(const Graph& g) {
    std::vector<Edge> arcs;
    arcs.reserve(2 * g.size());
    for (const auto& [u, v] : g.edges()) {
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
    }
    return from_arcs(g.order(), arcs);
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return out_.targets.size(); }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.row(v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_.row(v); }
  std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_neighbors(v).size(); }
  bool has_arc(Vertex u, Vertex v) const { return out_.contains(u, v); }
  bool is_digon(Vertex u, Vertex v) const { return has_arc(u, v) && has_arc(v, u); }
  bool in_digon(Vertex v) const { return in_digon_[static_cast<std::size_t>(v)] != 0; }
  bool connected() const noexcept { return weakly_connected_; }

  // Digons as (u, v) with u < v.
  const std::vector<Edge>& digons() const noexcept { return digons_; }

  std::vector<Edge> arcs() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (std::size_t u = 0; u < n_; ++u)
      for (Vertex v : out_neighbors(static_cast<Vertex>(u))) out.emplace_back(static_cast<Vertex>(u), v);
    return out;
  }

  Graph underlying() const {
    std::vector<Edge> edges;
    edges.reserve(size());
    for (const auto& [u, v] : arcs()) edges.emplace_back(std::min(u, v), std::max(u, v));
    return Graph::from_edges(n_, edges);
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_.offsets == b.out_.offsets && a.out_.targets == b.out_.targets;
  }

 private:
  std::size_t n_ = 0;
  detail::Csr out_;
  detail::Csr in_;
  std::vector<char> in_digon_;
  std::vector<Edge> digons_;
  bool weakly_connected_ = true;
};

// Adjacency interface shared by Graph and Digraph; games move along out-arcs.
template <class G>
concept GameGraph = requires(const G& g, Vertex v) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.out_neighbors(v) } -> std::convertible_to<std::span<const Vertex>>;
  { g.in_neighbors(v) } -> std::convertible_to<std::span<const Vertex>>;
  { g.connected() } -> std::convertible_to<bool>;
};

}  // namespace copsrobbers
