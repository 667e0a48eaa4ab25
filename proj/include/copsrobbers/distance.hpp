#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "copsrobbers/errors.hpp"
#include "copsrobbers/graph.hpp"

namespace copsrobbers {

// Forward BFS distances from `source` along out-arcs.
template <GameGraph G>
std::vector<Hops> bfs_distances(const G& g, Vertex source, Hops limit = kUnreachable) {
  std::vector<Hops> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    Hops dv = dist[static_cast<std::size_t>(v)];
    if (dv >= limit) continue;
    for (Vertex w : g.out_neighbors(v)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw == kUnreachable) {
        dw = dv + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Distances *to* `target` (BFS along in-arcs).
template <GameGraph G>
std::vector<Hops> reverse_bfs_distances(const G& g, Vertex target, Hops limit = kUnreachable) {
  std::vector<Hops> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{target};
  dist[static_cast<std::size_t>(target)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    Hops dv = dist[static_cast<std::size_t>(v)];
    if (dv >= limit) continue;
    for (Vertex w : g.in_neighbors(v)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw == kUnreachable) {
        dw = dv + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Lazily cached single-source BFS tables. dist(v, u) is the length of a
// shortest (directed) path from v to u, kUnreachable when none exists.
//
// Rows are computed on first use and never evicted; filling is guarded by a
// mutex so a shared oracle may be read from several threads. Intended for
// n <= 1e5 sources.
template <GameGraph G>
class DistanceOracle {
 public:
  explicit DistanceOracle(const G& g) : g_(&g), rows_(g.order()) {}

  DistanceOracle(const DistanceOracle&) = delete;
  DistanceOracle& operator=(const DistanceOracle&) = delete;

  const G& graph() const noexcept { return *g_; }
  std::size_t order() const noexcept { return g_->order(); }

  std::span<const Hops> from(Vertex source) const {
    detail::check_vertex(g_->order(), source);
    auto idx = static_cast<std::size_t>(source);
    {
      std::lock_guard lock(mutex_);
      if (rows_[idx]) return *rows_[idx];
    }
    auto row = std::make_unique<std::vector<Hops>>(bfs_distances(*g_, source));
    std::lock_guard lock(mutex_);
    if (!rows_[idx]) rows_[idx] = std::move(row);
    return *rows_[idx];
  }

  Hops dist(Vertex from_vertex, Vertex to_vertex) const {
    return from(from_vertex)[static_cast<std::size_t>(to_vertex)];
  }

  void precompute_all() const {
    for (std::size_t v = 0; v < g_->order(); ++v) from(static_cast<Vertex>(v));
  }

 private:
  const G* g_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<std::vector<Hops>>> rows_;
};

template <GameGraph G>
DistanceOracle(const G&) -> DistanceOracle<G>;

// B_r(S): vertices whose distance from some s in S is at most r. Sorted.
template <GameGraph G>
std::vector<Vertex> ball(const DistanceOracle<G>& oracle, std::span<const Vertex> sources, Hops r) {
  if (sources.empty()) throw InvalidInput("ball: empty source set");
  if (r < 0) throw InvalidInput("ball: negative radius");
  std::vector<char> in(oracle.order(), 0);
  for (Vertex s : sources) {
    auto row = oracle.from(s);
    for (std::size_t w = 0; w < row.size(); ++w)
      if (row[w] <= r) in[w] = 1;
  }
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < in.size(); ++w)
    if (in[w]) out.push_back(static_cast<Vertex>(w));
  return out;
}

template <GameGraph G>
std::vector<Vertex> ball(const DistanceOracle<G>& oracle, Vertex v, Hops r) {
  Vertex s[] = {v};
  return ball(oracle, std::span<const Vertex>(s), r);
}

// S_rho(v): vertices at distance exactly rho from v. Sorted.
template <GameGraph G>
std::vector<Vertex> sphere(const DistanceOracle<G>& oracle, Vertex v, Hops rho) {
  std::vector<Vertex> out;
  auto row = oracle.from(v);
  for (std::size_t w = 0; w < row.size(); ++w)
    if (row[w] == rho) out.push_back(static_cast<Vertex>(w));
  return out;
}

}  // namespace copsrobbers
