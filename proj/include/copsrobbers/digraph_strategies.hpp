#pragma once

// Robber strategies on dispersed digraphs.
//
// Out-degree version: like the undirected degree version, but cops are
// grouped by traps through the robber's out-neighbours and weighed by trap
// distance, w = r^{t - rho*}.
// Growth version: targets at distance h, the path towards them built one step
// at a time by minimising W_l / d_l, weights frozen for the whole state.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "copsrobbers/dispersion.hpp"
#include "copsrobbers/distance.hpp"
#include "copsrobbers/errors.hpp"
#include "copsrobbers/evasion.hpp"
#include "copsrobbers/game.hpp"
#include "copsrobbers/graph.hpp"
#include "copsrobbers/graph_algorithms.hpp"
#include "copsrobbers/rational.hpp"

namespace copsrobbers {

struct DigraphEvasionOptions : EvasionOptions {
  bool digon_exception = true;
  // Reuse an earlier certificate instead of certifying again.
  std::optional<DispersionCertificate> certificate;
};

struct DigraphLedger {
  std::vector<Vertex> targets;
  std::vector<int> cls;
  std::vector<Hops> rho;  // rho*(v_s, C), kUnreachable beyond the class radius
  std::vector<Rational> weight;
  std::vector<Rational> W_i;  // out-degree version: includes k/q
  Rational W;
  long unclassified = 0;
  long overlaps = 0;

  std::size_t argmin() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < W_i.size(); ++i)
      if (W_i[i] < W_i[best]) best = i;
    return best;
  }
};

namespace detail {

// Vertices x with 1 <= dv[x] <= radius.
inline std::vector<Vertex> punctured_ball(std::span<const Hops> dv, Hops radius) {
  std::vector<Vertex> out;
  for (std::size_t x = 0; x < dv.size(); ++x)
    if (dv[x] >= 1 && dv[x] <= radius) out.push_back(static_cast<Vertex>(x));
  return out;
}

// rho*(v, c) if it is at most the radius of `ball`, else kUnreachable.
inline Hops bounded_trap_distance(std::span<const Vertex> ball, std::span<const Hops> dv, std::span<const Hops> dc) {
  Hops best = kUnreachable;
  for (Vertex x : ball) {
    auto xi = static_cast<std::size_t>(x);
    if (dc[xi] <= dv[xi]) best = std::min(best, dv[xi]);
  }
  return best;
}

// A trap from v to the cop through the arc v -> w: some x in S_rho(v) with
// dist(w, x) = rho - 1 and dist(c, x) <= rho.
inline bool trap_through(std::span<const Vertex> ball, std::span<const Hops> dv, std::span<const Hops> dw,
                         std::span<const Hops> dc) {
  for (Vertex x : ball) {
    auto xi = static_cast<std::size_t>(x);
    if (dw[xi] == dv[xi] - 1 && dc[xi] <= dv[xi]) return true;
  }
  return false;
}

inline bool cop_on(std::span<const Vertex> cops, Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); }

inline DigraphLedger outdegree_ledger(const Digraph& d, const StrategyParams& p, Vertex v, Vertex prev,
                                      std::span<const Vertex> cops) {
  DigraphLedger L;
  for (Vertex w : d.out_neighbors(v))
    if (w != prev && static_cast<long>(L.targets.size()) < p.candidates) L.targets.push_back(w);
  if (static_cast<long>(L.targets.size()) < p.candidates)
    throw PreconditionError("vertex " + std::to_string(v) + " has fewer than " + std::to_string(p.candidates) +
                            " out-neighbours besides " + std::to_string(prev));
  const Hops R = p.t;
  auto dv = bfs_distances(d, v, R);
  auto ball = punctured_ball(dv, R);
  std::vector<std::vector<Hops>> du;
  for (Vertex u : L.targets) du.push_back(bfs_distances(d, u, R));
  const auto q = static_cast<long>(L.targets.size());
  L.cls.assign(cops.size(), -1);
  L.rho.assign(cops.size(), kUnreachable);
  L.weight.assign(cops.size(), Rational(1));
  std::vector<Rational> sums(static_cast<std::size_t>(q), Rational(0));
  for (std::size_t c = 0; c < cops.size(); ++c) {
    auto dc = bfs_distances(d, cops[c], R);
    L.rho[c] = bounded_trap_distance(ball, dv, dc);
    if (L.rho[c] > R) continue;
    for (long i = 0; i < q; ++i)
      if (trap_through(ball, dv, du[static_cast<std::size_t>(i)], dc)) {
        if (L.cls[c] >= 0) {
          ++L.overlaps;
          continue;
        }
        L.cls[c] = static_cast<int>(i);
        L.weight[c] = p.weight(L.rho[c]);
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

inline void digraph_preconditions(const Digraph& d, const StrategyParams& p, const DigraphEvasionOptions& opt,
                                  long q_available, const std::string& q_name, EvasionResult& res) {
  std::vector<std::string> problems;
  const long m = opt.cops.value_or(p.capacity);
  if (m > p.capacity)
    problems.push_back(std::to_string(m) + " cops exceed the strategy capacity " + std::to_string(p.capacity));
  if (q_available < p.q) problems.push_back(q_name + " is " + std::to_string(q_available) + ", below q=" + std::to_string(p.q));
  DispersionCertificate cert;
  if (opt.certificate) {
    cert = *opt.certificate;
  } else {
    DispersionOptions dopt;
    dopt.digon_exception = opt.digon_exception;
    cert = is_t_dispersed(d, p.dispersion_required, dopt);
  }
  if (cert.t < p.dispersion_required || cert.digon_exception != opt.digon_exception)
    problems.push_back("supplied certificate does not match the required dispersion");
  else if (!cert.dispersed)
    problems.push_back("digraph is not " + std::to_string(p.dispersion_required) + "-dispersed");
  if (!problems.empty()) {
    if (opt.strict) throw PreconditionError(problems.front());
    res.warnings = problems;
  }
}

inline std::vector<Vertex> initial_cops(const Digraph& d, long m, Vertex start, Vertex& robber) {
  check_vertex(d.order(), start);
  if (d.out_degree(start) == 0) throw PreconditionError("start vertex has no out-neighbour");
  robber = d.out_neighbors(start)[0];
  return std::vector<Vertex>(static_cast<std::size_t>(m), start);
}

}  // namespace detail

inline DigraphLedger classify_cops_outdegree(const Digraph& d, Vertex v_s, Vertex v_prev, std::span<const Vertex> cops,
                                             const StrategyParams& p) {
  return detail::outdegree_ledger(d, p, v_s, v_prev, cops);
}

// Out-degree version. The robber starts on the lowest-id out-neighbour of
// `start`, where all cops stand, and moves first.
inline EvasionResult simulate_evasion_outdegree(const Digraph& d, CopPolicy<Digraph> policy, const StrategyParams& p,
                                                long max_states, const DigraphEvasionOptions& opt = {}) {
  if (!p.directed || p.h != 1) throw InvalidInput("out-degree version needs digraph parameters with h = 1");
  if (max_states < 0) throw InvalidInput("max_rounds must be >= 0");
  const long m = opt.cops.value_or(p.capacity);
  if (m < 0) throw InvalidInput("cop count must be >= 0");
  EvasionResult res;
  res.params = p;
  res.cops = m;
  res.vacuous = m == 0;
  detail::digraph_preconditions(d, p, opt, static_cast<long>(digraph_min_q(d)), "minimum q_v", res);
  auto flag = [&](std::string msg) {
    ++res.invariant_violations;
    if (res.violations.size() < 100) res.violations.push_back(std::move(msg));
  };

  Vertex v = 0;
  auto cops = detail::initial_cops(d, m, opt.start, v);
  Vertex prev = opt.start;
  auto ledger = detail::outdegree_ledger(d, p, v, prev, cops);
  const Rational bound = p.bound(), threshold = p.threshold(), mm(m);
  for (long s = 1; s <= max_states; ++s) {
    const std::string at = "state " + std::to_string(s) + ": ";
    if (!(ledger.W < bound)) flag(at + "W = " + to_string(ledger.W) + " is not below " + to_string(bound));
    if (ledger.overlaps > 0) flag(at + "cop classes overlap");
    const std::size_t j = ledger.argmin();
    const Vertex u = ledger.targets[j];
    StateRecord rec;
    rec.state = s;
    rec.v = v;
    rec.y = prev;
    rec.target = u;
    rec.W = ledger.W;
    rec.W_max = *std::max_element(ledger.W_i.begin(), ledger.W_i.end());
    rec.W_min = ledger.W_i[j];
    rec.W_j = ledger.W_i[j];
    rec.classified = m - ledger.unclassified;
    if (ledger.W_i[j] < threshold) {
      rec.safety_applies = true;
      if (detail::cop_on(cops, u)) rec.safe = false;
      for (Vertex w : d.in_neighbors(u)) rec.safe = rec.safe && !detail::cop_on(cops, w);
      if (!rec.safe) flag(at + "safety claim failed at target " + std::to_string(u));
    }
    ++res.robber_moves;
    bool captured = detail::cop_on(cops, u);
    if (!captured) {
      GameView<Digraph> view{d, cops, u, res.robber_moves};
      auto next = policy(view);
      validate_cop_move(d, cops, next);
      cops = std::move(next);
      captured = detail::cop_on(cops, u);
    }
    if (opt.keep_trace) res.trace.push_back(rec);
    if (captured) {
      res.survived = false;
      res.capture_state = s;
      flag(at + "robber captured");
      break;
    }
    auto next_ledger = detail::outdegree_ledger(d, p, u, v, cops);
    if (next_ledger.W > p.r * ledger.W_i[j] + mm)
      flag(at + "W' = " + to_string(next_ledger.W) + " exceeds r W_j + m = " + to_string(p.r * ledger.W_i[j] + mm));
    for (std::size_t c = 0; c < cops.size(); ++c)
      if (ledger.cls[c] != static_cast<int>(j) && next_ledger.weight[c] != 1)
        flag(at + "cop " + std::to_string(c) + " outside the chosen class kept weight " + to_string(next_ledger.weight[c]));
    ledger = std::move(next_ledger);
    prev = v;
    v = u;
    res.states = s;
  }
  return res;
}

// Growth version. Each state is h robber steps; see the header comment.
inline EvasionResult simulate_evasion_digraph_growth(const Digraph& d, CopPolicy<Digraph> policy,
                                                     const StrategyParams& p, long max_states,
                                                     const DigraphEvasionOptions& opt = {}) {
  if (!p.directed) throw InvalidInput("growth version needs digraph parameters");
  if (max_states < 0) throw InvalidInput("max_rounds must be >= 0");
  const long m = opt.cops.value_or(p.capacity);
  if (m < 0) throw InvalidInput("cop count must be >= 0");
  EvasionResult res;
  res.params = p;
  res.cops = m;
  res.vacuous = m == 0;
  DistanceOracle oracle(d);
  detail::digraph_preconditions(d, p, opt, static_cast<long>(digraph_growth_parameter(d, oracle, p.h)),
                                "(h,q)-growth parameter", res);
  auto flag = [&](std::string msg) {
    ++res.invariant_violations;
    if (res.violations.size() < 100) res.violations.push_back(std::move(msg));
  };

  const int h = p.h;
  const Hops L = p.dispersion_required;  // h(t+1) - 1
  const Rational bound = p.bound(), threshold = p.threshold(), mm(m);
  Vertex v = 0;
  auto cops = detail::initial_cops(d, m, opt.start, v);
  Vertex y = opt.start;

  // Carried from the previous state for the transition checks.
  bool have_prev = false;
  std::vector<char> prev_D;
  std::vector<Rational> prev_w;
  Rational prev_Z;

  for (long s = 1; s <= max_states; ++s) {
    const std::string at = "state " + std::to_string(s) + ": ";
    auto dv = bfs_distances(d, v, std::max<Hops>(L, h));
    auto dy = bfs_distances(d, y, h);
    std::vector<Vertex> targets;
    for (std::size_t x = 0; x < d.order() && static_cast<long>(targets.size()) < p.q; ++x)
      if (dv[x] == h && dy[x] >= h) targets.push_back(static_cast<Vertex>(x));
    if (static_cast<long>(targets.size()) < p.q)
      throw PreconditionError("vertex " + std::to_string(v) + " has fewer than " + std::to_string(p.q) +
                              " targets at distance " + std::to_string(h));
    std::vector<std::vector<Hops>> to_target;
    for (Vertex u : targets) to_target.push_back(reverse_bfs_distances(d, u, h));

    // Traps of length <= h-1 from v to any cop must pass through y.
    if (h >= 2)
      for (Vertex c : cops) {
        if (c == v) continue;
        for (const auto& tr : enumerate_traps(oracle, v, c, h - 1)) {
          bool via_y = std::find(tr.P.begin(), tr.P.end(), y) != tr.P.end() ||
                       std::find(tr.Q.begin(), tr.Q.end(), y) != tr.Q.end();
          if (!via_y) flag(at + "short trap from " + std::to_string(v) + " to cop at " + std::to_string(c) + " avoids y");
        }
      }

    // Step loop. Step 1 also fixes the weights.
    std::vector<Rational> w(cops.size(), Rational(1));
    std::vector<int> cls1(cops.size(), -1);
    std::vector<Hops> rho1(cops.size(), kUnreachable);
    std::vector<char> D(cops.size(), 1);
    Rational Z, W;
    Vertex a = v, before = v;
    std::vector<char> prev_class;  // chosen class of the previous step
    bool captured = false;
    StateRecord rec;
    rec.state = s;
    rec.v = v;
    rec.y = y;
    for (int i = 1; i <= h && !captured; ++i) {
      const Hops R = h * (p.t + 1) - i;
      const int remaining = h - i + 1;
      auto da = bfs_distances(d, a, R);
      auto ball = detail::punctured_ball(da, R);
      std::vector<Vertex> ws;
      std::vector<long> dl;
      for (Vertex wv : d.out_neighbors(a)) {
        long count = 0;
        for (const auto& row : to_target)
          if (row[static_cast<std::size_t>(a)] == remaining && row[static_cast<std::size_t>(wv)] == remaining - 1) ++count;
        if (count > 0) {
          ws.push_back(wv);
          dl.push_back(count);
        }
      }
      if (ws.empty()) throw InternalError("growth strategy lost its targets");
      std::vector<std::vector<Hops>> dw;
      for (Vertex wv : ws) dw.push_back(bfs_distances(d, wv, R));
      // With the digon exception, traps that leave through the arc back to
      // the vertex the robber just left do not threaten: the robber keeps
      // moving away from it.
      const Vertex back = i == 1 ? y : before;
      std::vector<std::vector<Hops>> d_out;
      for (Vertex wv : d.out_neighbors(a))
        if (!(opt.digon_exception && wv == back)) d_out.push_back(bfs_distances(d, wv, R));
      std::vector<int> cls(cops.size(), -1);
      std::vector<char> threatening(cops.size(), 0);
      long threat_count = 0;
      for (std::size_t c = 0; c < cops.size(); ++c) {
        auto dc = bfs_distances(d, cops[c], R);
        Hops rho = detail::bounded_trap_distance(ball, da, dc);
        if (rho > R) continue;
        bool threat = false;
        for (const auto& row : d_out) threat = threat || detail::trap_through(ball, da, row, dc);
        if (!threat) continue;
        threatening[c] = 1;
        ++threat_count;
        if (i == 1) rho1[c] = rho;
        for (std::size_t l = 0; l < ws.size(); ++l)
          if (detail::trap_through(ball, da, dw[l], dc)) {
            if (cls[c] >= 0) {
              flag(at + "cop " + std::to_string(c) + " lies in two classes");
              continue;
            }
            cls[c] = static_cast<int>(l);
          }
      }
      if (i == 1) {
        cls1 = cls;
        long k = 0;
        Rational classified_sum = 0;
        for (std::size_t c = 0; c < cops.size(); ++c) {
          if (cls[c] < 0) {
            ++k;
            continue;
          }
          w[c] = p.weight(rho1[c]);
          classified_sum += w[c];
        }
        W = Rational(k) + classified_sum;
        Z = classified_sum / p.q;
        if (!(W < bound)) flag(at + "W = " + to_string(W) + " is not below " + to_string(bound));
        if (have_prev) {
          if (W > p.r * prev_Z + mm)
            flag(at + "W = " + to_string(W) + " exceeds r Z + m = " + to_string(p.r * prev_Z + mm));
          for (std::size_t c = 0; c < cops.size(); ++c) {
            if (w[c] > 1 && !prev_D[c]) flag(at + "cop " + std::to_string(c) + " left the threat set but weighs " + to_string(w[c]));
            if (prev_D[c] && cls[c] >= 0 && w[c] > p.r * prev_w[c] && w[c] > 1)
              flag(at + "cop " + std::to_string(c) + " weight grew from " + to_string(prev_w[c]) + " to " + to_string(w[c]));
          }
        }
      } else {
        for (std::size_t c = 0; c < cops.size(); ++c)
          if (threatening[c] && !prev_class[c])
            flag(at + "step " + std::to_string(i) + ": cop " + std::to_string(c) + " threatens outside the chosen class");
      }
      // Cops threatening now but unclassified at step 1 would have no frozen
      // weight; they were flagged above and count as weight 1.
      std::vector<Rational> sums(ws.size(), Rational(0));
      for (std::size_t c = 0; c < cops.size(); ++c)
        if (cls[c] >= 0) sums[static_cast<std::size_t>(cls[c])] += w[c];
      std::size_t j = 0;
      Rational best = sums[0] / dl[0];
      for (std::size_t l = 1; l < ws.size(); ++l) {
        Rational ratio = sums[l] / dl[l];
        if (ratio < best) {
          best = ratio;
          j = l;
        }
      }
      if (best > Z) flag(at + "step " + std::to_string(i) + ": W_j/d_j = " + to_string(best) + " exceeds Z = " + to_string(Z));
      prev_class.assign(cops.size(), 0);
      for (std::size_t c = 0; c < cops.size(); ++c) {
        prev_class[c] = cls[c] == static_cast<int>(j);
        D[c] = D[c] && prev_class[c];
      }
      if (i == 1) {
        rec.W = W;
        rec.Z = Z;
        rec.W_j = best;
        rec.W_min = best;
        rec.W_max = best;
        for (std::size_t l = 0; l < ws.size(); ++l) rec.W_max = std::max(rec.W_max, Rational(sums[l] / dl[l]));
        rec.classified = m;
        for (int c : cls) rec.classified -= c < 0;
      }
      StepRecord step;
      step.state = s;
      step.step = i;
      step.at = a;
      step.chosen = ws[j];
      step.d_j = dl[j];
      step.ratio = best;
      step.threatening = threat_count;
      if (opt.keep_trace) res.steps.push_back(step);

      before = a;
      a = ws[j];
      ++res.robber_moves;
      if (detail::cop_on(cops, a)) {
        captured = true;
        break;
      }
      GameView<Digraph> view{d, cops, a, res.robber_moves};
      auto next = policy(view);
      validate_cop_move(d, cops, next);
      cops = std::move(next);
      if (detail::cop_on(cops, a)) captured = true;
    }
    rec.target = a;

    // End-of-state checks on the surviving threat set D.
    Rational D_weight = 0;
    for (std::size_t c = 0; c < cops.size(); ++c)
      if (D[c]) D_weight += w[c];
    if (D_weight > Z) flag(at + "threat set weighs " + to_string(D_weight) + " > Z = " + to_string(Z));
    if (Z < threshold) {
      rec.safety_applies = true;
      for (std::size_t c = 0; c < cops.size(); ++c)
        if (D[c] && rho1[c] < 2 * h) rec.safe = false;
      if (!rec.safe) flag(at + "a cop within trap distance 2h survived in the threat set");
    }
    if (opt.keep_trace) res.trace.push_back(rec);
    if (captured) {
      res.survived = false;
      res.capture_state = s;
      flag(at + "robber captured");
      break;
    }
    if (std::find(targets.begin(), targets.end(), a) == targets.end())
      flag(at + "robber ended at " + std::to_string(a) + ", not a target");
    have_prev = true;
    prev_D = D;
    prev_w = w;
    prev_Z = Z;
    y = before;
    v = a;
    res.states = s;
  }
  return res;
}

}  // namespace copsrobbers
