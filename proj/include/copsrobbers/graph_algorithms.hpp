#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "copsrobbers/distance.hpp"
#include "copsrobbers/graph.hpp"

namespace copsrobbers {

// Length of a shortest cycle; std::nullopt for forests.
//
// One truncated BFS per root: a non-tree edge (x, y) seen from root s closes a
// closed walk of length d(x) + d(y) + 1 containing a cycle no longer than that,
// and the shortest cycle is hit exactly from any of its vertices.
inline std::optional<int> girth(const Graph& g) {
  const std::size_t n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> touched;
  std::deque<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    for (Vertex v : touched) dist[static_cast<std::size_t>(v)] = -1;
    touched.clear();
    queue.clear();
    auto root = static_cast<Vertex>(s);
    dist[s] = 0;
    parent[s] = -1;
    touched.push_back(root);
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      int dx = dist[static_cast<std::size_t>(x)];
      if (2 * dx + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        auto yi = static_cast<std::size_t>(y);
        if (dist[yi] < 0) {
          dist[yi] = dx + 1;
          parent[yi] = x;
          touched.push_back(y);
          queue.push_back(y);
        } else if (y != parent[static_cast<std::size_t>(x)]) {
          best = std::min(best, dx + dist[yi] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Two-colouring (0/1 per vertex); empty when the graph is not bipartite.
inline std::vector<int> bipartition(const Graph& g) {
  if (!is_bipartite(g)) return {};
  std::vector<int> side(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (side[static_cast<std::size_t>(w)] < 0) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        }
    }
  }
  return side;
}

// Number of w with dist(v, w) == h and dist(u, w) >= h.
template <GameGraph G>
std::size_t growth_count(const DistanceOracle<G>& oracle, Vertex v, Vertex u, Hops h) {
  auto from_v = oracle.from(v);
  auto from_u = oracle.from(u);
  std::size_t count = 0;
  for (std::size_t w = 0; w < from_v.size(); ++w)
    if (from_v[w] == h && from_u[w] >= h) ++count;
  return count;
}

// Largest q such that g has (h, q)-growth: minimum over v and u in N(v) of
// growth_count(v, u, h). 0 when g has no edges.
inline std::size_t growth_parameter(const Graph& g, const DistanceOracle<Graph>& oracle, Hops h) {
  if (h < 1) throw InvalidInput("growth_parameter: h must be >= 1");
  std::size_t q = std::numeric_limits<std::size_t>::max();
  bool any = false;
  for (std::size_t v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
      any = true;
      q = std::min(q, growth_count(oracle, static_cast<Vertex>(v), u, h));
    }
  return any ? q : 0;
}

inline std::size_t growth_parameter(const Graph& g, Hops h) {
  DistanceOracle oracle(g);
  return growth_parameter(g, oracle, h);
}

// Digraph variant: v ranges over vertices, y over in-neighbours of v.
inline std::size_t digraph_growth_parameter(const Digraph& d, const DistanceOracle<Digraph>& oracle, Hops h) {
  if (h < 1) throw InvalidInput("digraph_growth_parameter: h must be >= 1");
  std::size_t q = std::numeric_limits<std::size_t>::max();
  bool any = false;
  for (std::size_t v = 0; v < d.order(); ++v)
    for (Vertex y : d.in_neighbors(static_cast<Vertex>(v))) {
      any = true;
      q = std::min(q, growth_count(oracle, static_cast<Vertex>(v), y, h));
    }
  return any ? q : 0;
}

inline std::size_t digraph_growth_parameter(const Digraph& d, Hops h) {
  DistanceOracle oracle(d);
  return digraph_growth_parameter(d, oracle, h);
}

// min over v of q_v, where q_v = d+(v) minus one if v lies on a digon.
inline std::size_t digraph_min_q(const Digraph& d) {
  std::size_t q = std::numeric_limits<std::size_t>::max();
  for (std::size_t v = 0; v < d.order(); ++v) {
    auto vv = static_cast<Vertex>(v);
    std::size_t qv = d.out_degree(vv);
    if (d.in_digon(vv)) qv -= 1;
    q = std::min(q, qv);
  }
  return d.order() == 0 ? 0 : q;
}

}  // namespace copsrobbers
