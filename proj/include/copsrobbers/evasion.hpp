#pragma once

// Parameters, per-state records and results shared by the robber strategies.

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "copsrobbers/errors.hpp"
#include "copsrobbers/graph.hpp"
#include "copsrobbers/rational.hpp"

namespace copsrobbers {

// floor(q^t / (e t)), evaluated in long double.
inline long cop_bound(long q, int t) {
  if (t < 1) throw InvalidInput("t must be >= 1");
  long double v = std::pow(static_cast<long double>(q), t) / (std::exp(1.0L) * static_cast<long double>(t));
  return static_cast<long>(std::floor(v));
}

struct StrategyParams {
  int t = 2;
  int h = 1;
  long q = 0;            // branching of the bound: delta - 1, or the growth parameter
  long candidates = 0;   // directions the robber weighs each state
  Rational r;            // (1 - 1/t) q
  long K = 0;            // floor(q^t / (e t))
  long capacity = 0;     // most cops the ledger induction tolerates
  int girth_required = 0;
  bool unit_weights = false;   // t = 1: every cop weighs 1
  bool aigner_fromme = false;  // degree version with t = 1: all delta neighbours are candidates
  bool directed = false;
  int dispersion_required = 0;  // digraph versions: certify this much dispersion

  Rational threshold() const { return unit_weights ? Rational(1) : pow(r, t - 1); }
  // W must stay strictly below this.
  Rational bound() const { return Rational(candidates) * threshold(); }

  // Exponent-based weight for a classified cop at distance rho from the robber.
  Rational weight(Hops rho) const {
    if (unit_weights) return 1;
    if (directed) return pow(r, t + 1 - static_cast<int>((rho + 1 + h - 1) / h));
    int e = t + 1 - static_cast<int>((rho + 2 + 2 * h - 1) / (2 * h));
    return pow(r, e);
  }

  static StrategyParams degree(int t, long min_degree) {
    if (t < 1) throw InvalidInput("t must be >= 1");
    if (min_degree < 2) throw PreconditionError("degree strategy needs minimum degree >= 2");
    StrategyParams p;
    p.t = t;
    p.h = 1;
    p.q = min_degree - 1;
    p.r = Rational(p.q) * Rational(t - 1, t);
    p.K = cop_bound(p.q, t);
    p.girth_required = 4 * t + 1;
    if (t == 1) {
      // Girth >= 5: every cop dominates at most one neighbour of the robber,
      // so delta - 1 cops always leave a safe neighbour.
      p.aigner_fromme = true;
      p.unit_weights = true;
      p.candidates = min_degree;
      p.capacity = min_degree - 1;
    } else {
      p.candidates = p.q;
      p.capacity = static_cast<long>(floor(Rational(p.q) * pow(p.r, t - 1) / t));
    }
    return p;
  }

  static StrategyParams growth(int t, int h, long q) {
    if (t < 1) throw InvalidInput("t must be >= 1");
    if (h < 1) throw InvalidInput("h must be >= 1");
    if (q < 1) throw PreconditionError("growth strategy needs q >= 1");
    StrategyParams p;
    p.t = t;
    p.h = h;
    p.q = q;
    p.candidates = q;
    p.r = Rational(q) * Rational(t - 1, t);
    p.K = cop_bound(q, t);
    p.girth_required = 4 * h * (t + 1) - 3;
    if (t == 1) {
      p.unit_weights = true;
      p.capacity = q - 1;
    } else {
      p.capacity = static_cast<long>(floor(Rational(q) * pow(p.r, t - 1) / t));
    }
    return p;
  }

  // Out-degree version on a t-dispersed digraph; q from digraph_min_q.
  static StrategyParams digraph_outdegree(int t, long q) {
    auto p = growth(t, 1, q);
    p.directed = true;
    p.girth_required = 0;
    p.dispersion_required = t;
    return p;
  }

  // Growth version on an (h(t+1)-1)-dispersed digraph with (h,q)-growth.
  static StrategyParams digraph_growth(int t, int h, long q) {
    auto p = growth(t, h, q);
    p.directed = true;
    p.girth_required = 0;
    p.dispersion_required = h * (t + 1) - 1;
    return p;
  }
};

struct StateRecord {
  long state = 0;
  Vertex v = 0;       // robber at the start of the state
  Vertex y = 0;       // previous anchor
  Vertex target = 0;  // chosen u_j
  Rational W;
  Rational W_max;
  Rational W_min;
  Rational W_j;
  Rational Z;         // digraph growth: average threatening weight
  long classified = 0;
  bool safe = true;   // the safety claim held (or did not apply)
  bool safety_applies = false;
};

// One robber step inside a digraph growth state. Trap distances behind it are
// measured with the robber at `at` and the robber to move.
struct StepRecord {
  long state = 0;
  int step = 0;
  Vertex at = 0;
  Vertex chosen = 0;
  long d_j = 0;
  Rational ratio;  // W_j / d_j
  long threatening = 0;
};

struct EvasionOptions {
  std::optional<long> cops;  // default: the strategy capacity
  Vertex start = 0;          // v_0; the robber starts on its lowest-id neighbour
  bool keep_trace = true;
  // When false, failed girth and capacity preconditions are reported as
  // warnings and the game is played anyway.
  bool strict = true;
};

struct EvasionResult {
  bool survived = true;
  long states = 0;         // states completed
  long robber_moves = 0;
  long capture_state = -1;
  long cops = 0;
  StrategyParams params;
  bool vacuous = false;    // no cops at all
  std::vector<std::string> warnings;
  long invariant_violations = 0;
  std::vector<std::string> violations;
  std::vector<StateRecord> trace;
  std::vector<StepRecord> steps;
};

// One row per state; rationals printed exactly as p/q.
inline void write_trace_tsv(std::ostream& out, const std::vector<StateRecord>& trace) {
  out << "state\tv_s\tu_j\tW\tmax_W_i\tmin_W_i\tsafety\n";
  for (const auto& s : trace)
    out << s.state << '\t' << s.v << '\t' << s.target << '\t' << to_string(s.W) << '\t' << to_string(s.W_max) << '\t'
        << to_string(s.W_min) << '\t' << (!s.safety_applies ? "n/a" : s.safe ? "safe" : "UNSAFE") << '\n';
}

inline void write_steps_tsv(std::ostream& out, const std::vector<StepRecord>& steps) {
  out << "state\tstep\tmover\tat\tw_j\td_j\tratio\tthreatening\n";
  for (const auto& s : steps)
    out << s.state << '\t' << s.step << "\trobber\t" << s.at << '\t' << s.chosen << '\t' << s.d_j << '\t'
        << to_string(s.ratio) << '\t' << s.threatening << '\n';
}

}  // namespace copsrobbers
