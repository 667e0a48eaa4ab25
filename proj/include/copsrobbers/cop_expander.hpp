#pragma once

// Random cop placement on an expander: every vertex hosts a cop with
// probability p, the robber picks v, and the cops fill B_r(v) in r moves if
// the auxiliary graph H (target u ~ cop c when dist(u,c) <= r) has a matching
// saturating B_r(v).

#include <atomic>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "copsrobbers/distance.hpp"
#include "copsrobbers/errors.hpp"
#include "copsrobbers/evasion.hpp"
#include "copsrobbers/graph.hpp"
#include "copsrobbers/graph_algorithms.hpp"
#include "copsrobbers/matching.hpp"
#include "copsrobbers/spectral.hpp"

namespace copsrobbers {

struct ProofCheck {
  std::string name;
  bool holds = false;
  double lhs = 0, rhs = 0;
};

struct ExpanderParams {
  std::size_t n = 0;
  long max_degree = 0;
  double eps = 0;
  double gamma = 0;
  double delta_slack = 0.1;
  double kappa = 0;
  Hops r = 0;
  double p_raw = 0;   // n^-kappa log^3 n before clamping
  double p_prob = 0;
  bool clamped = false;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
  std::vector<ProofCheck> checks;  // hypotheses the finite instance does or does not meet

  double chernoff_cap() const {
    const double ln = std::log(static_cast<double>(n));
    return 2.0 * std::pow(static_cast<double>(n), 1.0 - kappa) * ln * ln * ln;
  }
};

inline ExpanderParams make_expander_params(std::size_t n, long max_degree, double eps, double gamma,
                                           double delta_slack = 0.1, std::uint64_t seed = 0) {
  if (n < 2) throw InvalidInput("expander: need n >= 2");
  if (max_degree < 3) throw InvalidInput("expander: max degree must be >= 3");
  if (!(eps > 0) || eps > static_cast<double>(max_degree - 2))
    throw InvalidInput("expander: epsilon must satisfy 0 < eps <= max_degree - 2");
  if (!(gamma > 0 && gamma < 1)) throw InvalidInput("expander: gamma must lie in (0,1)");
  if (!(delta_slack > 0 && delta_slack < 0.25)) throw InvalidInput("expander: delta must lie in (0,1/4)");
  ExpanderParams p;
  p.n = n;
  p.max_degree = max_degree;
  p.eps = eps;
  p.gamma = gamma;
  p.delta_slack = delta_slack;
  p.seed = seed;
  const double lb = std::log(static_cast<double>(max_degree - 1));
  const double ln = std::log(static_cast<double>(n));
  const double growth = std::log1p(eps) / lb;  // log_{D-1}(1+eps)
  p.kappa = (0.5 - 2 * delta_slack) * growth;
  p.r = static_cast<Hops>(std::floor((0.5 - delta_slack) * ln / lb));
  p.p_raw = std::pow(static_cast<double>(n), -p.kappa) * ln * ln * ln;
  p.p_prob = std::min(1.0, p.p_raw);
  if (p.p_raw > 1.0) {
    p.clamped = true;
    p.warnings.push_back("p = " + std::to_string(p.p_raw) + " > 1 clamped to 1; n is below the theorem's range");
  }
  p.checks.push_back({"gamma <= (1/2)(1 - log_{D-1}(1+eps))", gamma <= 0.5 * (1 - growth), gamma, 0.5 * (1 - growth)});
  p.checks.push_back({"gamma < 1/2 - kappa", gamma < 0.5 - p.kappa, gamma, 0.5 - p.kappa});
  p.checks.push_back({"delta log_{D-1} n >= 1", delta_slack * ln / lb >= 1, delta_slack * ln / lb, 1});
  p.checks.push_back({"p <= 1", !p.clamped, p.p_raw, 1});
  p.checks.push_back({"r >= 1", p.r >= 1, static_cast<double>(p.r), 1});
  return p;
}

// The ball inequalities used with the proof's r: |B_r(v)| at most the Moore
// bound 1 + D/(D-2)((D-1)^r - 1), and below sqrt(n).
inline void add_ball_checks(const Graph& g, ExpanderParams& p) {
  std::size_t worst = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    auto d = bfs_distances(g, v, p.r);
    std::size_t c = 0;
    for (Hops x : d) c += x <= p.r;
    worst = std::max(worst, c);
  }
  const double D = static_cast<double>(p.max_degree);
  const double moore = 1 + D / (D - 2) * (std::pow(D - 1, static_cast<double>(p.r)) - 1);
  p.checks.push_back({"max |B_r(v)| <= 1 + D/(D-2)((D-1)^r - 1)", static_cast<double>(worst) <= moore + 1e-9,
                      static_cast<double>(worst), moore});
  const double root = std::sqrt(static_cast<double>(g.order()));
  p.checks.push_back({"max |B_r(v)| < sqrt(n)", static_cast<double>(worst) < root, static_cast<double>(worst), root});
}

struct CopSample {
  std::vector<Vertex> cops;  // sorted
  double expected = 0;       // n p
  double chernoff_cap = 0;   // 2 n^(1-kappa) log^3 n
};

inline std::mt19937_64 trial_rng(std::uint64_t master, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

inline CopSample sample_cop_set(const Graph& g, const ExpanderParams& p, std::uint64_t trial = 0) {
  if (g.order() != p.n) throw InvalidInput("expander parameters were built for a different n");
  auto rng = trial_rng(p.seed, trial);
  std::bernoulli_distribution coin(p.p_prob);
  CopSample s;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
    if (coin(rng)) s.cops.push_back(v);
  s.expected = static_cast<double>(g.order()) * p.p_prob;
  s.chernoff_cap = p.chernoff_cap();
  return s;
}

struct CapturePlan {
  Vertex start = 0;
  Hops r = 0;
  std::vector<Vertex> targets;                  // B_r(start), sorted
  std::vector<Vertex> assigned;                 // cop vertex per target
  std::vector<std::vector<Vertex>> routes;      // cop -> target geodesic, per target
};

struct CaptureAttempt {
  bool ok = false;
  CapturePlan plan;
  std::vector<Vertex> deficient;       // S in B_r(v) with |B_r(S) cap C| < |S|
  std::vector<Vertex> deficient_cops;  // B_r(S) cap C
};

namespace detail {

// Bounded BFS kept local to the ball, so small radii stay cheap on big graphs.
struct LocalBall {
  std::vector<Vertex> order;
  std::unordered_map<Vertex, Hops> dist;
};

inline LocalBall local_ball(const Graph& g, Vertex src, Hops r) {
  LocalBall b;
  b.order.push_back(src);
  b.dist[src] = 0;
  for (std::size_t i = 0; i < b.order.size(); ++i) {
    Vertex x = b.order[i];
    Hops dx = b.dist[x];
    if (dx == r) continue;
    for (Vertex w : g.neighbors(x))
      if (b.dist.emplace(w, dx + 1).second) b.order.push_back(w);
  }
  return b;
}

}  // namespace detail

// Cop vertices deduplicated, with a position lookup.
struct CopIndex {
  std::vector<Vertex> C;
  std::vector<std::size_t> at;  // per vertex, index into C or kFree

  CopIndex(std::size_t n, std::span<const Vertex> cops) : at(n, BipartiteMatching::kFree) {
    for (Vertex c : cops) {
      detail::check_vertex(n, c);
      auto& slot = at[static_cast<std::size_t>(c)];
      if (slot == BipartiteMatching::kFree) {
        slot = C.size();
        C.push_back(c);
      }
    }
  }
};

inline CaptureAttempt build_capture_plan(const Graph& g, const CopIndex& cops, Vertex v, Hops r) {
  detail::check_vertex(g.order(), v);
  if (r < 0) throw InvalidInput("radius must be >= 0");
  if (cops.at.size() != g.order()) throw InvalidInput("cop index built for a different graph");
  const auto& C = cops.C;
  CaptureAttempt out;
  auto& plan = out.plan;
  plan.start = v;
  plan.r = r;
  plan.targets = detail::local_ball(g, v, r).order;
  std::sort(plan.targets.begin(), plan.targets.end());

  std::vector<detail::LocalBall> from_target;
  std::vector<std::vector<std::size_t>> adj(plan.targets.size());
  for (std::size_t i = 0; i < plan.targets.size(); ++i) {
    from_target.push_back(detail::local_ball(g, plan.targets[i], r));
    for (Vertex w : from_target.back().order)
      if (auto j = cops.at[static_cast<std::size_t>(w)]; j != BipartiteMatching::kFree) adj[i].push_back(j);
  }
  auto m = hopcroft_karp(adj, C.size());
  if (!m.saturates_left()) {
    for (auto i : m.hall_set) out.deficient.push_back(plan.targets[i]);
    for (auto j : m.hall_neighbours) out.deficient_cops.push_back(C[j]);
    std::sort(out.deficient_cops.begin(), out.deficient_cops.end());
    return out;
  }
  out.ok = true;
  for (std::size_t i = 0; i < plan.targets.size(); ++i) {
    Vertex c = C[m.left_match[i]];
    plan.assigned.push_back(c);
    // Walk down the distance field of the target.
    const auto& d = from_target[i].dist;
    std::vector<Vertex> route{c};
    while (d.at(route.back()) > 0) {
      Vertex here = route.back(), step = here;
      for (Vertex w : g.neighbors(here))
        if (auto it = d.find(w); it != d.end() && it->second + 1 == d.at(here)) {
          step = w;
          break;
        }
      route.push_back(step);
    }
    plan.routes.push_back(std::move(route));
  }
  return out;
}

inline CaptureAttempt build_capture_plan(const Graph& g, std::span<const Vertex> cops, Vertex v, Hops r) {
  return build_capture_plan(g, CopIndex(g.order(), cops), v, r);
}

// Robber move: next vertex in N[robber].
using RobberPolicy = std::function<Vertex(const Graph&, Vertex robber, std::span<const Vertex> cops, long round)>;

inline RobberPolicy stationary_robber() {
  return [](const Graph&, Vertex robber, std::span<const Vertex>, long) { return robber; };
}

inline RobberPolicy random_robber(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const Graph& g, Vertex robber, std::span<const Vertex>, long) {
    auto nb = g.neighbors(robber);
    auto k = std::uniform_int_distribution<std::size_t>(0, nb.size())(*rng);
    return k == nb.size() ? robber : nb[k];
  };
}

// Maximises the distance to the nearest cop, ties to the lowest id.
inline RobberPolicy greedy_robber() {
  return [](const Graph& g, Vertex robber, std::span<const Vertex> cops, long) {
    std::vector<Hops> d(g.order(), kUnreachable);
    std::vector<Vertex> q;
    for (Vertex c : cops)
      if (d[static_cast<std::size_t>(c)] != 0) {
        d[static_cast<std::size_t>(c)] = 0;
        q.push_back(c);
      }
    for (std::size_t i = 0; i < q.size(); ++i)
      for (Vertex w : g.neighbors(q[i]))
        if (d[static_cast<std::size_t>(w)] == kUnreachable) {
          d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(q[i])] + 1;
          q.push_back(w);
        }
    std::vector<Vertex> options{robber};
    for (Vertex w : g.neighbors(robber)) options.push_back(w);
    std::sort(options.begin(), options.end());
    Vertex best = options.front();
    for (Vertex w : options)
      if (d[static_cast<std::size_t>(w)] > d[static_cast<std::size_t>(best)]) best = w;
    return best;
  };
}

struct CaptureRun {
  bool captured = false;
  long capture_round = 0;  // 1-based cop turn on which the robber was caught
  std::vector<Vertex> robber_path;
};

// The assigned cops start at the heads of their routes and the robber at the
// plan's start. Each round the cops advance one step (waiting at the end of
// their route), then the robber moves. Cops outside the matching play no part.
inline CaptureRun execute_capture(const Graph& g, const CapturePlan& plan, const RobberPolicy& robber_policy) {
  std::vector<char> in_ball(g.order(), 0);
  for (Vertex u : plan.targets) in_ball[static_cast<std::size_t>(u)] = 1;
  if (plan.routes.size() != plan.targets.size() || plan.assigned.size() != plan.targets.size())
    throw InternalError("capture plan does not cover B_r(v)");
  std::vector<Vertex> pos;
  for (std::size_t i = 0; i < plan.routes.size(); ++i) {
    const auto& route = plan.routes[i];
    if (route.empty() || route.front() != plan.assigned[i] || route.back() != plan.targets[i] ||
        static_cast<Hops>(route.size()) - 1 > plan.r)
      throw InternalError("capture plan route for target " + std::to_string(plan.targets[i]) + " is invalid");
    for (std::size_t k = 1; k < route.size(); ++k)
      if (!g.has_edge(route[k - 1], route[k])) throw InternalError("capture plan route leaves the graph");
    if (std::find(plan.assigned.begin(), plan.assigned.begin() + static_cast<long>(i), plan.assigned[i]) !=
        plan.assigned.begin() + static_cast<long>(i))
      throw InternalError("capture plan assigns one cop twice");
    pos.push_back(route.front());
  }
  CaptureRun run;
  Vertex robber = plan.start;
  run.robber_path.push_back(robber);
  auto caught = [&] { return std::find(pos.begin(), pos.end(), robber) != pos.end(); };
  if (caught()) {
    run.captured = true;
    return run;
  }
  for (long round = 1; round <= plan.r + 1; ++round) {
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const auto& route = plan.routes[i];
      pos[i] = route[std::min(static_cast<std::size_t>(round), route.size() - 1)];
    }
    if (caught()) {
      run.captured = true;
      run.capture_round = round;
      return run;
    }
    Vertex next = robber_policy(g, robber, pos, round);
    if (next != robber && !g.has_edge(robber, next)) throw AdversaryFault("robber moved to a non-neighbour");
    robber = next;
    run.robber_path.push_back(robber);
    if (round <= plan.r && !in_ball[static_cast<std::size_t>(robber)])
      throw InternalError("robber left B_r(v) within r rounds");
    if (caught()) {
      run.captured = true;
      run.capture_round = round;
      return run;
    }
  }
  return run;
}

struct Interval {
  double lo = 0, hi = 0;
};

// 95% Wilson score interval.
inline Interval wilson_interval(std::size_t successes, std::size_t trials) {
  if (trials == 0) return {0, 1};
  const double z = 1.959963984540054, nn = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / nn;
  const double den = 1 + z * z / nn;
  const double mid = (ph + z * z / (2 * nn)) / den;
  const double half = z * std::sqrt(ph * (1 - ph) / nn + z * z / (4 * nn * nn)) / den;
  return {std::max(0.0, mid - half), std::min(1.0, mid + half)};
}

struct MonteCarloOptions {
  std::size_t capture_samples = 4;  // plans executed per trial; SIZE_MAX runs every plan
  std::vector<std::string> robbers = {"greedy"};  // any of stationary, random, greedy
  unsigned threads = 1;
};

inline RobberPolicy make_robber(const std::string& name, std::uint64_t seed) {
  if (name == "stationary") return stationary_robber();
  if (name == "random") return random_robber(seed);
  if (name == "greedy") return greedy_robber();
  throw InvalidInput("unknown robber '" + name + "' (stationary, random, greedy)");
}

// |B_r(S) cap C| < |S| recomputed from scratch.
inline bool is_hall_violation(const Graph& g, const CopIndex& cops, std::span<const Vertex> S, Hops r) {
  if (S.empty()) return false;
  std::unordered_map<Vertex, Hops> dist;
  std::vector<Vertex> q;
  for (Vertex s : S)
    if (dist.emplace(s, 0).second) q.push_back(s);
  for (std::size_t i = 0; i < q.size(); ++i) {
    Hops dx = dist[q[i]];
    if (dx == r) continue;
    for (Vertex w : g.neighbors(q[i]))
      if (dist.emplace(w, dx + 1).second) q.push_back(w);
  }
  std::size_t hit = 0;
  for (Vertex x : q) hit += cops.at[static_cast<std::size_t>(x)] != BipartiteMatching::kFree;
  return hit < S.size();
}

struct MonteCarloResult {
  std::size_t trials = 0;
  std::size_t successes = 0;  // trials where every start vertex has a plan
  std::size_t pair_successes = 0;
  std::size_t pairs = 0;
  double success_rate = 0;
  Interval ci95;
  double mean_cops = 0;
  double mean_capture_round = 0;
  std::size_t escapes = 0;  // must stay 0
  std::size_t runs = 0;     // plan executions, all robbers
  std::size_t plan_violations = 0;  // unsound plans caught by execute_capture; must stay 0
  std::size_t hall_failures = 0;    // failed plans
  std::size_t hall_unverified = 0;  // failed plans whose witness did not re-check; must stay 0
  std::vector<std::vector<Vertex>> first_failures;  // Hall sets from failing trials, up to 5
};

inline MonteCarloResult monte_carlo_capture_rate(const Graph& g, const ExpanderParams& p, std::size_t trials,
                                                 const MonteCarloOptions& opt = {}) {
  if (trials < 1) throw InvalidInput("trials must be >= 1");
  struct Trial {
    bool all = true;
    std::size_t ok = 0, cops = 0, escapes = 0, runs = 0, unsound = 0, failures = 0, unverified = 0;
    long rounds = 0;
    std::vector<Vertex> failure;
  };
  std::vector<Trial> out(trials);
  const auto n = static_cast<Vertex>(g.order());
  auto work = [&](std::size_t t) {
    auto& tr = out[t];
    auto sample = sample_cop_set(g, p, t);
    tr.cops = sample.cops.size();
    std::vector<CapturePlan> plans;
    const CopIndex index(g.order(), sample.cops);
    for (Vertex v = 0; v < n; ++v) {
      auto att = build_capture_plan(g, index, v, p.r);
      if (att.ok) {
        ++tr.ok;
        if (plans.size() < opt.capture_samples) plans.push_back(std::move(att.plan));
      } else {
        if (tr.all) tr.failure = att.deficient;
        tr.all = false;
        ++tr.failures;
        if (!is_hall_violation(g, index, att.deficient, p.r)) ++tr.unverified;
      }
    }
    for (const auto& plan : plans)
      for (const auto& name : opt.robbers) {
        auto robber = make_robber(name, trial_rng(p.seed ^ 0x9e3779b97f4a7c15ULL, t * g.order() + plan.start)());
        ++tr.runs;
        try {
          auto run = execute_capture(g, plan, robber);
          if (!run.captured || run.capture_round > p.r) ++tr.escapes;
          tr.rounds += run.capture_round;
        } catch (const InternalError&) {
          ++tr.unsound;
        }
      }
  };
  const unsigned threads = std::max(1u, opt.threads);
  if (threads == 1) {
    for (std::size_t t = 0; t < trials; ++t) work(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k)
      pool.emplace_back([&] {
        for (std::size_t t; (t = next++) < trials;) work(t);
      });
    for (auto& th : pool) th.join();
  }
  MonteCarloResult res;
  res.trials = trials;
  std::size_t runs = 0;
  long rounds = 0;
  double cops = 0;
  for (const auto& tr : out) {
    res.successes += tr.all;
    res.pair_successes += tr.ok;
    res.pairs += g.order();
    res.escapes += tr.escapes;
    runs += tr.runs;
    rounds += tr.rounds;
    res.plan_violations += tr.unsound;
    res.hall_failures += tr.failures;
    res.hall_unverified += tr.unverified;
    cops += static_cast<double>(tr.cops);
    if (!tr.all && res.first_failures.size() < 5) res.first_failures.push_back(tr.failure);
  }
  res.success_rate = static_cast<double>(res.successes) / static_cast<double>(trials);
  res.ci95 = wilson_interval(res.successes, trials);
  res.mean_cops = cops / static_cast<double>(trials);
  res.runs = runs;
  res.mean_capture_round = runs ? static_cast<double>(rounds) / static_cast<double>(runs) : 0.0;
  return res;
}

// Upper versus lower cop-number exponents for a (p+1)-regular graph of girth g.
struct GirthExponentReport {
  std::size_t n = 0;
  long d = 0;
  long p = 0;
  int girth = 0;
  double lambda2 = 0;
  double upper_limit_exponent = 0;   // (1 + 2 log_p 4)(3/8), bound p^{e g}
  double upper_n_exponent = 0;       // 1/2 + log_p 4, bound n^e
  double upper_cops = 0;             // n^{1/2 + log_p 4}
  double upper_girth_exponent = 0;   // log_p(upper_cops) / girth
  double n_girth_exponent = 0;       // log_p(n) / girth, limit 3/4
  int lower_t = 0;                   // floor((girth - 1)/4)
  long lower_cops = 0;               // floor(p^t / (e t))
  double lower_girth_exponent = 0;   // log_p(lower_cops) / girth
};

inline GirthExponentReport girth_exponent_report(const Graph& g, const SpectralReport& rep) {
  auto gi = girth(g);
  if (!gi) throw PreconditionError("girth exponent report needs a graph with a cycle");
  if (rep.d < 3) throw PreconditionError("girth exponent report needs degree >= 3");
  GirthExponentReport out;
  out.n = g.order();
  out.d = rep.d;
  out.p = rep.d - 1;
  out.girth = *gi;
  out.lambda2 = rep.lambda2;
  const double lp = std::log(static_cast<double>(out.p));
  const double log_p4 = std::log(4.0) / lp;
  out.upper_limit_exponent = (1 + 2 * log_p4) * 3.0 / 8.0;
  out.upper_n_exponent = 0.5 + log_p4;
  out.upper_cops = std::pow(static_cast<double>(out.n), out.upper_n_exponent);
  out.upper_girth_exponent = std::log(out.upper_cops) / lp / out.girth;
  out.n_girth_exponent = std::log(static_cast<double>(out.n)) / lp / out.girth;
  out.lower_t = (out.girth - 1) / 4;
  if (out.lower_t >= 1) {
    out.lower_cops = cop_bound(out.p, out.lower_t);
    out.lower_girth_exponent = out.lower_cops > 0 ? std::log(static_cast<double>(out.lower_cops)) / lp / out.girth : 0;
  }
  return out;
}

}  // namespace copsrobbers
