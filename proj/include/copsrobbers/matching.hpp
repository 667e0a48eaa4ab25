#pragma once

// Maximum bipartite matching (Hopcroft-Karp). When the left side is not
// saturated the alternating-reachability set from free left vertices is a
// Hall violator: |N(S)| = |S| - (number of free left vertices in it).

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace copsrobbers {

struct BipartiteMatching {
  static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> left_match;   // right index or kFree
  std::vector<std::size_t> right_match;  // left index or kFree
  std::size_t size = 0;
  std::vector<std::size_t> hall_set;        // left vertices, empty when saturated
  std::vector<std::size_t> hall_neighbours;  // N(hall_set)
  bool saturates_left() const { return size == left_match.size(); }
};

// adj[l] lists the right neighbours of left vertex l.
inline BipartiteMatching hopcroft_karp(const std::vector<std::vector<std::size_t>>& adj, std::size_t n_right) {
  constexpr std::size_t kFree = BipartiteMatching::kFree;
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t n_left = adj.size();
  BipartiteMatching m;
  m.left_match.assign(n_left, kFree);
  m.right_match.assign(n_right, kFree);
  std::vector<std::size_t> layer(n_left);

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t l = 0; l < n_left; ++l) {
      layer[l] = m.left_match[l] == kFree ? 0 : kInf;
      if (layer[l] == 0) q.push(l);
    }
    while (!q.empty()) {
      auto l = q.front();
      q.pop();
      for (auto r : adj[l]) {
        auto l2 = m.right_match[r];
        if (l2 == kFree)
          found = true;
        else if (layer[l2] == kInf) {
          layer[l2] = layer[l] + 1;
          q.push(l2);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, std::size_t l) -> bool {
    for (auto r : adj[l]) {
      auto l2 = m.right_match[r];
      if (l2 == kFree || (layer[l2] == layer[l] + 1 && self(self, l2))) {
        m.left_match[l] = r;
        m.right_match[r] = l;
        return true;
      }
    }
    layer[l] = kInf;
    return false;
  };
  while (bfs())
    for (std::size_t l = 0; l < n_left; ++l)
      if (m.left_match[l] == kFree && dfs(dfs, l)) ++m.size;

  if (!m.saturates_left()) {
    std::vector<char> seen_l(n_left, 0), seen_r(n_right, 0);
    std::queue<std::size_t> q;
    for (std::size_t l = 0; l < n_left; ++l)
      if (m.left_match[l] == kFree) {
        seen_l[l] = 1;
        q.push(l);
      }
    while (!q.empty()) {
      auto l = q.front();
      q.pop();
      for (auto r : adj[l]) {
        if (seen_r[r]) continue;
        seen_r[r] = 1;
        auto l2 = m.right_match[r];  // matched, else an augmenting path would exist
        if (l2 != kFree && !seen_l[l2]) {
          seen_l[l2] = 1;
          q.push(l2);
        }
      }
    }
    for (std::size_t l = 0; l < n_left; ++l)
      if (seen_l[l]) m.hall_set.push_back(l);
    for (std::size_t r = 0; r < n_right; ++r)
      if (seen_r[r]) m.hall_neighbours.push_back(r);
  }
  return m;
}

}  // namespace copsrobbers
