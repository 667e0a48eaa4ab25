#pragma once

// Retrograde solver for the k-cop game.
//
// Cops place first, the robber places second, then the cops move. Every agent
// moves inside the closed out-neighbourhood of its vertex; the cops all move
// within one cop turn. Positions are (sorted cop multiset, robber, side to move)
// and are resolved backwards from captures, so anything never resolved is a
// robber win (the position-repeat rule is implicit).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "copsrobbers/errors.hpp"
#include "copsrobbers/graph.hpp"

namespace copsrobbers {

enum class Side : std::uint8_t { cops = 0, robber = 1 };

inline constexpr std::uint64_t kDefaultStateBudget = 100'000'000ULL;

// Default budget, overridable through COPSROBBERS_STATE_BUDGET.
inline std::uint64_t default_state_budget() {
  if (const char* env = std::getenv("COPSROBBERS_STATE_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultStateBudget;
}

struct SolverOptions {
  std::uint64_t state_budget = default_state_budget();
};

// k * n^(k+1), saturating.
inline std::uint64_t solver_state_requirement(std::size_t n, int k) {
  long double req = static_cast<long double>(k) * std::pow(static_cast<long double>(n), k + 1);
  if (req >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::llround(req));
}

namespace detail {

// Ranks sorted k-multisets over [0, n) with the combinatorial number system
// applied to c_i + i.
class MultisetIndex {
 public:
  MultisetIndex(std::size_t n, int k) : n_(n), k_(k) {
    const std::size_t top = n + static_cast<std::size_t>(k);
    binom_.assign(top + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 2, 0));
    for (std::size_t a = 0; a <= top; ++a) {
      binom_[a][0] = 1;
      for (std::size_t b = 1; b <= static_cast<std::size_t>(k) + 1 && b <= a; ++b)
        binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
    }
    count_ = binom_[n + static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(k)];
  }

  std::uint64_t count() const noexcept { return count_; }

  // `sorted` must be non-decreasing.
  std::uint64_t rank(std::span<const Vertex> sorted) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
      r += binom_[static_cast<std::size_t>(sorted[i]) + i][i + 1];
    return r;
  }

  std::vector<Vertex> unrank(std::uint64_t r) const {
    std::vector<Vertex> out(static_cast<std::size_t>(k_));
    for (int i = k_ - 1; i >= 0; --i) {
      // Largest d with C(d, i+1) <= r.
      std::size_t d = static_cast<std::size_t>(i);
      while (d + 1 < binom_.size() && binom_[d + 1][static_cast<std::size_t>(i) + 1] <= r) ++d;
      r -= binom_[d][static_cast<std::size_t>(i) + 1];
      out[static_cast<std::size_t>(i)] = static_cast<Vertex>(d - static_cast<std::size_t>(i));
    }
    return out;
  }

 private:
  std::size_t n_;
  int k_;
  std::uint64_t count_ = 0;
  std::vector<std::vector<std::uint64_t>> binom_;
};

// Calls f(tuple) for every tuple in the product of closed neighbourhoods
// (`out` selects out- or in-neighbourhoods).
template <GameGraph G, class F>
void for_each_closed_product(const G& g, std::span<const Vertex> base, bool out, std::vector<Vertex>& tuple, F&& f,
                             std::size_t i = 0) {
  if (i == base.size()) {
    f(static_cast<const std::vector<Vertex>&>(tuple));
    return;
  }
  tuple[i] = base[i];
  for_each_closed_product(g, base, out, tuple, f, i + 1);
  for (Vertex w : out ? g.out_neighbors(base[i]) : g.in_neighbors(base[i])) {
    tuple[i] = w;
    for_each_closed_product(g, base, out, tuple, f, i + 1);
  }
}

}  // namespace detail

template <GameGraph G>
class CopsRobbersSolver {
 public:
  CopsRobbersSolver(const G& g, int k, SolverOptions options = {}) : g_(&g), k_(k), index_(g.order(), std::max(k, 1)) {
    if (k < 1) throw InvalidInput("cop count must be >= 1");
    if (g.order() == 0) throw InvalidInput("empty graph");
    if (!g.connected()) throw PreconditionError("solver requires a connected input");
    auto required = solver_state_requirement(g.order(), k);
    if (required > options.state_budget)
      throw ResourceError("state space k*n^(k+1) = " + std::to_string(required) + " exceeds budget " +
                              std::to_string(options.state_budget) + " (set COPSROBBERS_STATE_BUDGET to at least " +
                              std::to_string(required) + ")",
                          required);
    solve();
  }

  int cops() const noexcept { return k_; }
  bool cop_win() const noexcept { return cop_win_; }
  std::uint64_t states_explored() const noexcept { return 2 * index_.count() * g_->order(); }
  std::uint64_t states_resolved() const noexcept { return resolved_; }

  // Plies until capture from the best cop placement against the best robber
  // placement; empty when the robber wins.
  std::optional<int> capture_depth() const {
    if (!cop_win_) return std::nullopt;
    return best_start_depth_;
  }

  bool is_cop_win(std::span<const Vertex> cops, Vertex robber, Side to_move) const {
    return depth(cops, robber, to_move) >= 0;
  }

  // Plies to capture under optimal play; -1 for robber wins.
  int depth(std::span<const Vertex> cops, Vertex robber, Side to_move) const {
    return depth_[state(rank_of(cops), robber, to_move)];
  }

  // The cops' optimal simultaneous move, in the same order as `cops`. In lost
  // positions every cop steps towards nothing in particular: they stay put.
  std::vector<Vertex> best_cop_move(std::span<const Vertex> cops, Vertex robber) const {
    check_cops(cops);
    std::vector<Vertex> best(cops.begin(), cops.end());
    int best_depth = std::numeric_limits<int>::max();
    std::vector<Vertex> tuple(cops.size());
    std::vector<Vertex> sorted(cops.size());
    detail::for_each_closed_product(*g_, cops, true, tuple, [&](const std::vector<Vertex>& t) {
      sorted = t;
      std::sort(sorted.begin(), sorted.end());
      int d = depth_[state(index_.rank(sorted), robber, Side::robber)];
      if (d >= 0 && d < best_depth) {
        best_depth = d;
        best = t;
      }
    });
    return best;
  }

  // The robber's optimal reply: a robber-win move if any, else the slowest loss.
  Vertex best_robber_move(std::span<const Vertex> cops, Vertex robber) const {
    auto m = rank_of(cops);
    Vertex best = robber;
    int best_key = key_for_robber(depth_[state(m, robber, Side::cops)]);
    for (Vertex w : g_->out_neighbors(robber)) {
      int key = key_for_robber(depth_[state(m, w, Side::cops)]);
      if (key > best_key) {
        best_key = key;
        best = w;
      }
    }
    return best;
  }

  // Winning placement with the fewest plies to capture (when the cops win);
  // otherwise all cops on vertex 0.
  std::vector<Vertex> best_initial_placement() const { return best_start_; }

  // Robber start against a given placement: a robber-win vertex if any, else the
  // slowest capture. Vertices holding a cop are never chosen while others exist.
  Vertex best_robber_placement(std::span<const Vertex> cops) const {
    auto m = rank_of(cops);
    Vertex best = -1;
    int best_key = std::numeric_limits<int>::min();
    for (std::size_t v = 0; v < g_->order(); ++v) {
      auto vv = static_cast<Vertex>(v);
      if (std::find(cops.begin(), cops.end(), vv) != cops.end()) continue;
      int key = key_for_robber(depth_[state(m, vv, Side::cops)]);
      if (key > best_key) {
        best_key = key;
        best = vv;
      }
    }
    return best < 0 ? cops[0] : best;
  }

 private:
  static int key_for_robber(int depth) { return depth < 0 ? std::numeric_limits<int>::max() : depth; }

  void check_cops(std::span<const Vertex> cops) const {
    if (static_cast<int>(cops.size()) != k_)
      throw InvalidInput("expected " + std::to_string(k_) + " cop positions, got " + std::to_string(cops.size()));
    for (Vertex c : cops) detail::check_vertex(g_->order(), c);
  }

  std::uint64_t rank_of(std::span<const Vertex> cops) const {
    check_cops(cops);
    std::vector<Vertex> sorted(cops.begin(), cops.end());
    std::sort(sorted.begin(), sorted.end());
    return index_.rank(sorted);
  }

  std::size_t state(std::uint64_t m, Vertex r, Side side) const {
    return static_cast<std::size_t>((m * g_->order() + static_cast<std::uint64_t>(r)) * 2 + static_cast<std::uint64_t>(side));
  }

  void solve() {
    const std::size_t n = g_->order();
    const std::uint64_t count = index_.count();
    depth_.assign(static_cast<std::size_t>(2 * count * n), -1);
    // Robber-to-move counters: closed out-neighbourhood moves still not known to lose.
    std::vector<std::uint32_t> remaining(static_cast<std::size_t>(count * n), 0);
    std::deque<std::size_t> queue;
    std::vector<std::vector<Vertex>> multisets;
    multisets.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t m = 0; m < count; ++m) {
      multisets.push_back(index_.unrank(m));
      const auto& cs = multisets.back();
      for (std::size_t r = 0; r < n; ++r) {
        auto rv = static_cast<Vertex>(r);
        if (std::find(cs.begin(), cs.end(), rv) != cs.end()) {
          for (Side s : {Side::cops, Side::robber}) {
            depth_[state(m, rv, s)] = 0;
            queue.push_back(state(m, rv, s));
          }
        } else {
          remaining[static_cast<std::size_t>(m * n + r)] = static_cast<std::uint32_t>(g_->out_neighbors(rv).size() + 1);
        }
      }
    }

    std::vector<Vertex> tuple(static_cast<std::size_t>(k_));
    std::vector<Vertex> sorted(static_cast<std::size_t>(k_));
    while (!queue.empty()) {
      std::size_t s = queue.front();
      queue.pop_front();
      ++resolved_;
      const int d = depth_[s];
      const auto side = static_cast<Side>(s & 1);
      const std::uint64_t mr = s >> 1;
      const std::uint64_t m = mr / n;
      const auto r = static_cast<Vertex>(mr % n);
      if (side == Side::robber) {
        // Cops just moved into m: every cop position that can reach m wins.
        detail::for_each_closed_product(*g_, std::span<const Vertex>(multisets[static_cast<std::size_t>(m)]), false,
                                        tuple, [&](const std::vector<Vertex>& t) {
                                          sorted = t;
                                          std::sort(sorted.begin(), sorted.end());
                                          auto pm = index_.rank(sorted);
                                          auto ps = state(pm, r, Side::cops);
                                          if (depth_[ps] < 0) {
                                            depth_[ps] = d + 1;
                                            queue.push_back(ps);
                                          }
                                        });
      } else {
        // Robber moved to r from somewhere in the closed in-neighbourhood of r.
        auto visit = [&](Vertex from) {
          auto ps = state(m, from, Side::robber);
          if (depth_[ps] >= 0) return;
          auto& left = remaining[static_cast<std::size_t>(m * n + static_cast<std::uint64_t>(from))];
          if (--left == 0) {
            depth_[ps] = d + 1;
            queue.push_back(ps);
          }
        };
        visit(r);
        for (Vertex from : g_->in_neighbors(r)) visit(from);
      }
    }

    cop_win_ = false;
    best_start_.assign(static_cast<std::size_t>(k_), 0);
    best_start_depth_ = std::numeric_limits<int>::max();
    for (std::uint64_t m = 0; m < count; ++m) {
      const auto& cs = multisets[static_cast<std::size_t>(m)];
      int worst = 0;
      bool wins = true;
      for (std::size_t r = 0; r < n && wins; ++r) {
        auto rv = static_cast<Vertex>(r);
        if (std::find(cs.begin(), cs.end(), rv) != cs.end()) continue;
        int dd = depth_[state(m, rv, Side::cops)];
        if (dd < 0) wins = false;
        worst = std::max(worst, dd);
      }
      if (wins && worst < best_start_depth_) {
        cop_win_ = true;
        best_start_depth_ = worst;
        best_start_ = cs;
      }
    }
  }

  const G* g_;
  int k_;
  detail::MultisetIndex index_;
  std::vector<std::int32_t> depth_;
  std::uint64_t resolved_ = 0;
  bool cop_win_ = false;
  int best_start_depth_ = 0;
  std::vector<Vertex> best_start_;
};

template <GameGraph G>
bool k_cop_win(const G& g, int k, SolverOptions options = {}) {
  return CopsRobbersSolver<G>(g, k, options).cop_win();
}

struct CopNumberResult {
  int cop_number = 0;
  std::uint64_t states_explored = 0;  // summed over every k tried
  int capture_depth = 0;
};

// Least k <= k_max with a cop win; BoundExceeded if there is none.
template <GameGraph G>
CopNumberResult cop_number(const G& g, int k_max, SolverOptions options = {}) {
  if (k_max < 1) throw InvalidInput("k_max must be >= 1");
  CopNumberResult out;
  for (int k = 1; k <= k_max; ++k) {
    CopsRobbersSolver<G> solver(g, k, options);
    out.states_explored += solver.states_explored();
    if (solver.cop_win()) {
      out.cop_number = k;
      out.capture_depth = *solver.capture_depth();
      return out;
    }
  }
  throw BoundExceeded(k_max);
}

}  // namespace copsrobbers
