#pragma once

// Weight-based robber strategies on undirected graphs of large girth.
//
// Degree version: the robber looks at q neighbours u_1..u_q of v_s other than
// the vertex it came from, groups nearby cops by the neighbour their unique
// geodesic passes through, and steps to the neighbour of least total weight.
// Growth version: the same, with targets at distance h and an h-step walk along
// a fixed geodesic per state. All weights are exact rationals.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "copsrobbers/distance.hpp"
#include "copsrobbers/errors.hpp"
#include "copsrobbers/evasion.hpp"
#include "copsrobbers/game.hpp"
#include "copsrobbers/graph.hpp"
#include "copsrobbers/graph_algorithms.hpp"
#include "copsrobbers/rational.hpp"

namespace copsrobbers {

struct WeightLedger {
  std::vector<Vertex> targets;  // u_1..u_q, ascending ids
  std::vector<int> cls;         // per cop: class index, or -1 when unclassified
  std::vector<Hops> rho;        // per cop: distance to the robber (kUnreachable beyond range)
  std::vector<Rational> weight;
  std::vector<Rational> W_i;
  Rational W;
  long unclassified = 0;
  long overlaps = 0;  // cops matching more than one class (girth violated)

  // argmin W_i; ties go to the lowest target id.
  std::size_t argmin() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < W_i.size(); ++i)
      if (W_i[i] < W_i[best]) best = i;
    return best;
  }

  Rational max_class() const { return *std::max_element(W_i.begin(), W_i.end()); }
  Rational min_class() const { return *std::min_element(W_i.begin(), W_i.end()); }
};

namespace detail {

// Ledger for robber at v arriving from y. Targets are the lowest-id vertices at
// distance h from v and at least h from y (all neighbours in the t = 1 degree
// fallback).
inline WeightLedger build_ledger(const Graph& g, const StrategyParams& p, Vertex v, Vertex y,
                                 std::span<const Vertex> cops) {
  const Hops reach = 2 * p.h * (p.t + 1) - 2;
  WeightLedger L;
  auto dv = bfs_distances(g, v, std::max(reach, 4 * p.h - 2));
  if (p.aigner_fromme) {
    auto nb = g.neighbors(v);
    L.targets.assign(nb.begin(), nb.end());
  } else {
    auto dy = bfs_distances(g, y, p.h);
    for (std::size_t w = 0; w < g.order(); ++w)
      if (dv[w] == p.h && dy[w] >= p.h) L.targets.push_back(static_cast<Vertex>(w));
  }
  if (static_cast<long>(L.targets.size()) < p.candidates)
    throw PreconditionError("vertex " + std::to_string(v) + " has only " + std::to_string(L.targets.size()) +
                            " admissible targets, strategy needs " + std::to_string(p.candidates));
  L.targets.resize(static_cast<std::size_t>(p.candidates));

  std::vector<std::vector<Hops>> du;
  for (Vertex u : L.targets) du.push_back(bfs_distances(g, u, reach));

  const auto q = static_cast<long>(L.targets.size());
  L.cls.assign(cops.size(), -1);
  L.rho.resize(cops.size());
  L.weight.assign(cops.size(), Rational(1));
  std::vector<Rational> sums(static_cast<std::size_t>(q), Rational(0));
  for (std::size_t c = 0; c < cops.size(); ++c) {
    auto cv = static_cast<std::size_t>(cops[c]);
    Hops rho = dv[cv];
    L.rho[c] = rho;
    if (rho > reach || rho < p.h) continue;
    for (long i = 0; i < q; ++i)
      if (du[static_cast<std::size_t>(i)][cv] == rho - p.h) {
        if (L.cls[c] >= 0) {
          ++L.overlaps;
          continue;
        }
        L.cls[c] = static_cast<int>(i);
        L.weight[c] = p.weight(rho);
        sums[static_cast<std::size_t>(i)] += L.weight[c];
      }
  }
  for (int c : L.cls)
    if (c < 0) ++L.unclassified;
  L.W = 0;
  for (long i = 0; i < q; ++i) {
    L.W_i.push_back(Rational(L.unclassified, q) + sums[static_cast<std::size_t>(i)]);
    L.W += L.W_i.back();
  }
  return L;
}

// Geodesic v -> u of length d(v, u); lowest-id predecessor at each step.
inline std::vector<Vertex> geodesic(const Graph& g, Vertex v, Vertex u) {
  auto dv = bfs_distances(g, v);
  Hops len = dv[static_cast<std::size_t>(u)];
  if (len == kUnreachable) throw InternalError("geodesic: unreachable target");
  std::vector<Vertex> path(static_cast<std::size_t>(len) + 1);
  path.back() = u;
  for (Hops i = len; i > 0; --i) {
    Vertex x = path[static_cast<std::size_t>(i)];
    for (Vertex w : g.neighbors(x))
      if (dv[static_cast<std::size_t>(w)] == i - 1) {
        path[static_cast<std::size_t>(i) - 1] = w;
        break;
      }
  }
  return path;
}

inline std::optional<std::string> girth_problem(const Graph& g, const StrategyParams& p) {
  auto gi = girth(g);
  if (gi && *gi < p.girth_required)
    return "girth " + std::to_string(*gi) + " is below the required " + std::to_string(p.girth_required);
  return std::nullopt;
}

inline void check_girth(const Graph& g, const StrategyParams& p) {
  if (auto msg = girth_problem(g, p)) throw PreconditionError(*msg);
}

}  // namespace detail

// Ledger for the degree version at robber position v_s, previous position v_prev.
inline WeightLedger classify_cops_degree(const Graph& g, Vertex v_s, Vertex v_prev, std::span<const Vertex> cops,
                                         const StrategyParams& p) {
  detail::check_girth(g, p);
  if (v_prev != v_s && !g.has_edge(v_s, v_prev)) throw InvalidInput("v_prev must lie in N[v_s]");
  if (static_cast<long>(g.min_degree()) < p.q + 1) throw PreconditionError("minimum degree below q+1");
  return detail::build_ledger(g, p, v_s, v_prev, cops);
}

inline WeightLedger classify_cops_growth(const Graph& g, Vertex v_s, Vertex y_s, std::span<const Vertex> cops,
                                         const StrategyParams& p) {
  detail::check_girth(g, p);
  return detail::build_ledger(g, p, v_s, y_s, cops);
}

// Index of the chosen target.
inline std::size_t robber_step_degree(const WeightLedger& ledger) { return ledger.argmin(); }

namespace detail {

inline bool has_cop(std::span<const Vertex> cops, Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); }

inline EvasionResult run_undirected_evasion(const Graph& g, CopPolicy<Graph>& policy, const StrategyParams& p,
                                            long max_states, const EvasionOptions& opt) {
  const long num_cops = opt.cops.value_or(p.capacity);
  const Vertex start = opt.start;
  const bool keep_trace = opt.keep_trace;
  if (!g.connected()) throw PreconditionError("graph must be connected");
  if (num_cops < 0) throw InvalidInput("cop count must be >= 0");
  if (max_states < 0) throw InvalidInput("max_rounds must be >= 0");
  detail::check_vertex(g.order(), start);
  if (g.degree(start) == 0) throw PreconditionError("start vertex is isolated");

  EvasionResult res;
  res.params = p;
  res.cops = num_cops;
  res.vacuous = num_cops == 0;
  std::vector<std::string> problems;
  if (num_cops > p.capacity)
    problems.push_back(std::to_string(num_cops) + " cops exceed the strategy capacity " + std::to_string(p.capacity));
  if (auto msg = girth_problem(g, p)) problems.push_back(*msg);
  if (!problems.empty()) {
    if (opt.strict) throw PreconditionError(problems.front());
    res.warnings = problems;
  }
  auto flag = [&](std::string msg) {
    ++res.invariant_violations;
    if (res.violations.size() < 100) res.violations.push_back(std::move(msg));
  };

  std::vector<Vertex> cops(static_cast<std::size_t>(num_cops), start);
  Vertex y = start;
  Vertex v = g.neighbors(start)[0];
  auto ledger = build_ledger(g, p, v, y, cops);
  const Rational bound = p.bound();
  const Rational threshold = p.threshold();
  const auto m = Rational(num_cops);

  for (long s = 1; s <= max_states; ++s) {
    const std::string at = "state " + std::to_string(s) + ": ";
    if (!(ledger.W < bound)) flag(at + "W = " + to_string(ledger.W) + " is not below " + to_string(bound));
    if (ledger.overlaps > 0) flag(at + "cop classes overlap");
    if (p.h >= 2) {
      // Cops within 2h-2 must approach through y.
      auto dv = bfs_distances(g, v, 2 * p.h - 2);
      auto dy = bfs_distances(g, y, 2 * p.h - 1);
      for (Vertex c : cops) {
        Hops d = dv[static_cast<std::size_t>(c)];
        if (d <= 2 * p.h - 2 && dy[static_cast<std::size_t>(c)] != d - 1)
          flag(at + "cop at " + std::to_string(c) + " is within " + std::to_string(d) + " without passing y");
      }
    }
    const std::size_t j = ledger.argmin();
    const Vertex u = ledger.targets[j];
    StateRecord rec;
    rec.state = s;
    rec.v = v;
    rec.y = y;
    rec.target = u;
    rec.W = ledger.W;
    rec.W_max = ledger.max_class();
    rec.W_min = ledger.min_class();
    rec.W_j = ledger.W_i[j];
    rec.classified = static_cast<long>(cops.size()) - ledger.unclassified;
    if (ledger.W_i[j] < threshold) {
      rec.safety_applies = true;
      if (p.h == 1) {
        if (has_cop(cops, u)) rec.safe = false;
        for (Vertex w : g.neighbors(u)) rec.safe = rec.safe && !has_cop(cops, w);
      } else {
        for (std::size_t c = 0; c < cops.size(); ++c)
          if (ledger.cls[c] == static_cast<int>(j) && ledger.rho[c] <= 4 * p.h - 2) rec.safe = false;
      }
      if (!rec.safe) flag(at + "safety claim failed at target " + std::to_string(u));
    }

    auto path = p.h == 1 ? std::vector<Vertex>{v, u} : geodesic(g, v, u);
    bool captured = false;
    for (int step = 1; step <= p.h && !captured; ++step) {
      Vertex robber = path[static_cast<std::size_t>(step)];
      ++res.robber_moves;
      if (has_cop(cops, robber)) {
        captured = true;
        break;
      }
      GameView<Graph> view{g, cops, robber, res.robber_moves};
      auto next = policy(view);
      validate_cop_move(g, cops, next);
      cops = std::move(next);
      if (has_cop(cops, robber)) captured = true;
    }
    if (keep_trace) res.trace.push_back(rec);
    if (captured) {
      res.survived = false;
      res.capture_state = s;
      flag(at + "robber captured");
      break;
    }
    Vertex y_next = path[static_cast<std::size_t>(p.h) - 1];
    auto next_ledger = build_ledger(g, p, u, y_next, cops);
    if (next_ledger.W > p.r * ledger.W_i[j] + m)
      flag(at + "W' = " + to_string(next_ledger.W) + " exceeds r W_j + m = " + to_string(p.r * ledger.W_i[j] + m));
    for (std::size_t c = 0; c < cops.size(); ++c)
      if (ledger.cls[c] != static_cast<int>(j) && next_ledger.weight[c] != 1)
        flag(at + "cop " + std::to_string(c) + " outside the chosen class kept weight " + to_string(next_ledger.weight[c]));
    ledger = std::move(next_ledger);
    y = y_next;
    v = u;
    res.states = s;
  }
  return res;
}

}  // namespace detail

// Degree version from the standard start: all cops on `start`, robber on its
// lowest-id neighbour. `num_cops` defaults to the capacity.
inline EvasionResult simulate_evasion_degree(const Graph& g, CopPolicy<Graph> policy, const StrategyParams& p,
                                             long max_states, const EvasionOptions& opt = {}) {
  if (p.h != 1) throw InvalidInput("degree version needs h = 1");
  if (static_cast<long>(g.min_degree()) < p.q + 1) throw PreconditionError("minimum degree below q+1");
  return detail::run_undirected_evasion(g, policy, p, max_states, opt);
}

inline EvasionResult simulate_evasion_growth(const Graph& g, CopPolicy<Graph> policy, const StrategyParams& p,
                                             long max_states, const EvasionOptions& opt = {}) {
  auto actual = growth_parameter(g, p.h);
  if (static_cast<long>(actual) < p.q)
    throw PreconditionError("graph has (" + std::to_string(p.h) + "," + std::to_string(actual) + ")-growth, below q=" +
                            std::to_string(p.q));
  return detail::run_undirected_evasion(g, policy, p, max_states, opt);
}

}  // namespace copsrobbers
