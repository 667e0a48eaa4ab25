#pragma once

// The copsrobbers command line. run_cli() is the whole program; main() only
// forwards to it so tests can drive commands in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "copsrobbers/copsrobbers.hpp"

#ifndef COPSROBBERS_VERSION
#define COPSROBBERS_VERSION "dev"
#endif

namespace copsrobbers::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = COPSROBBERS_VERSION;

// ------------------------------------------------------------ input

inline bool is_file(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec);
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return in;
}

inline LoadedGraph load_graph(const std::string& arg) {
  if (is_file(arg)) {
    auto in = open_input(arg);
    return read_edge_list(in);
  }
  if (is_generator_spec(arg)) return {generate(arg), {}};
  throw InvalidInput("'" + arg + "' is neither an edge-list file nor a generator spec");
}

inline LoadedDigraph load_digraph(const std::string& arg) {
  if (is_file(arg)) {
    auto in = open_input(arg);
    return read_arc_list(in);
  }
  if (is_digraph_spec(arg)) return {generate_digraph(arg), {}};
  throw InvalidInput("'" + arg + "' is neither an arc-list file nor a digraph spec");
}

// Labels only matter when the file used non-numeric names.
inline void add_labels(json& j, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != std::to_string(i)) {
      j["labels"] = labels;
      return;
    }
}

// ------------------------------------------------------------ output

inline json hops_json(Hops h) { return h == kUnreachable ? json(nullptr) : json(h); }

inline json rational_json(const Rational& x) { return to_string(x); }

inline json trap_json(const Trap& t) {
  return {{"v", t.v}, {"u", t.u}, {"tip", t.x}, {"length", t.length()}, {"P", t.P}, {"Q", t.Q}};
}

inline json lemma_json(const LemmaReport& r) {
  return {{"lemma", r.lemma}, {"holds", r.holds}, {"checked", r.checked}, {"skipped", r.skipped},
          {"counterexamples", r.counterexamples}};
}

inline void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

inline void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "tsv") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    out << "key\tvalue\n";
    for (const auto& [k, v] : rows) out << k << '\t' << v << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  return out;
}

// ------------------------------------------------------------ commands

struct Common {
  std::string format = "json";
  std::uint64_t state_budget = default_state_budget();
  std::size_t trap_budget = kDefaultTrapBudget;
};

inline json header(const std::string& command, json config) {
  json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["config"] = std::move(config);
  return j;
}

inline json girth_cmd(const std::string& graph) {
  auto lg = load_graph(graph);
  const auto& g = lg.graph;
  auto j = header("girth", {{"graph", graph}});
  auto gi = girth(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["girth"] = gi ? json(*gi) : json(nullptr);
  j["acyclic"] = !gi;
  add_labels(j, lg.labels);
  return j;
}

inline json cop_number_cmd(const std::string& graph, int kmax, const Common& c) {
  if (kmax < 1) throw InvalidInput("--kmax must be >= 1");
  auto lg = load_graph(graph);
  const auto& g = lg.graph;
  auto j = header("cop-number", {{"graph", graph}, {"kmax", kmax}, {"state_budget", c.state_budget}});
  SolverOptions so{c.state_budget};
  std::uint64_t explored = 0;
  std::optional<int> k;
  int depth = 0;
  for (int i = 1; i <= kmax && !k; ++i) {
    CopsRobbersSolver<Graph> solver(g, i, so);
    explored += solver.states_explored();
    if (solver.cop_win()) {
      k = i;
      depth = *solver.capture_depth();
    }
  }
  j["graph"] = graph;
  j["k"] = k ? json(*k) : json(nullptr);
  j["cop_win"] = k.has_value();
  j["states_explored"] = explored;
  j["capture_depth"] = k ? json(depth) : json(nullptr);
  if (!k) j["note"] = "no cop count up to kmax wins; the cop number exceeds kmax";
  return j;
}

struct EvasionArgs {
  int t = 2;
  std::optional<int> h;
  std::string adversary = "greedy";
  long rounds = 1000;
  std::optional<long> cops;
  Vertex start = 0;
  std::uint64_t seed = 1;
  std::string trace;
  std::string steps;
  bool no_strict = false;
  std::string digon = "on";
};

inline json evasion_config(const std::string& graph, const EvasionArgs& a, const Common& c, bool digraph) {
  json cfg{{"graph", graph}, {"t", a.t}, {"h", a.h ? json(*a.h) : json(nullptr)}, {"adversary", a.adversary},
           {"rounds", a.rounds}, {"cops", a.cops ? json(*a.cops) : json(nullptr)}, {"start", a.start},
           {"seed", a.seed}, {"strict", !a.no_strict}};
  if (a.adversary == "optimal") cfg["state_budget"] = c.state_budget;
  if (digraph) {
    cfg["digon_exception"] = a.digon;
    cfg["trap_budget"] = c.trap_budget;
  }
  return cfg;
}

inline void evasion_result(json& j, const EvasionResult& r) {
  const auto& p = r.params;
  j["survived"] = r.survived;
  j["rounds"] = r.states;
  j["robber_moves"] = r.robber_moves;
  j["capture_state"] = r.capture_state >= 0 ? json(r.capture_state) : json(nullptr);
  j["bound_K"] = p.K;
  j["cops"] = r.cops;
  j["capacity"] = p.capacity;
  j["vacuous"] = r.vacuous;
  if (p.K == 0) j["note"] = "K = 0: the lower bound is trivially met";
  j["invariant_violations"] = r.invariant_violations;
  j["violations"] = r.violations;
  j["warnings"] = r.warnings;
  j["params"] = {{"t", p.t},
                 {"h", p.h},
                 {"q", p.q},
                 {"r", rational_json(p.r)},
                 {"candidates", p.candidates},
                 {"threshold", rational_json(p.threshold())},
                 {"ledger_bound", rational_json(p.bound())},
                 {"girth_required", p.girth_required},
                 {"dispersion_required", p.dispersion_required},
                 {"unit_weights", p.unit_weights}};
}

inline void write_traces(const EvasionResult& r, const EvasionArgs& a, json& j) {
  if (!a.trace.empty()) {
    auto out = open_output(a.trace);
    write_trace_tsv(out, r.trace);
    j["trace"] = a.trace;
  }
  if (!a.steps.empty()) {
    auto out = open_output(a.steps);
    write_steps_tsv(out, r.steps);
    j["steps"] = a.steps;
  }
}

inline json verify_lower_bound_cmd(const std::string& graph, const EvasionArgs& a, const Common& c) {
  auto lg = load_graph(graph);
  const auto& g = lg.graph;
  auto j = header("verify-lower-bound", evasion_config(graph, a, c, false));
  StrategyParams p;
  if (a.h) {
    auto q = growth_parameter(g, *a.h);
    p = StrategyParams::growth(a.t, *a.h, static_cast<long>(q));
    j["strategy"] = "growth";
  } else {
    p = StrategyParams::degree(a.t, static_cast<long>(g.min_degree()));
    j["strategy"] = "degree";
  }
  EvasionOptions opt;
  opt.cops = a.cops;
  opt.start = a.start;
  opt.strict = !a.no_strict;
  opt.keep_trace = !a.trace.empty();
  const long m = a.cops.value_or(p.capacity);
  auto policy = make_cop_policy<Graph>(a.adversary, g, static_cast<int>(m), a.seed, SolverOptions{c.state_budget});
  auto r = a.h ? simulate_evasion_growth(g, policy, p, a.rounds, opt) : simulate_evasion_degree(g, policy, p, a.rounds, opt);
  auto gi = girth(g);
  j["n"] = g.order();
  j["girth"] = gi ? json(*gi) : json(nullptr);
  evasion_result(j, r);
  write_traces(r, a, j);
  return j;
}

inline json verify_lower_bound_digraph_cmd(const std::string& graph, const EvasionArgs& a, const Common& c) {
  auto ld = load_digraph(graph);
  const auto& d = ld.digraph;
  auto j = header("verify-lower-bound-digraph", evasion_config(graph, a, c, true));
  StrategyParams p;
  if (a.h) {
    auto q = digraph_growth_parameter(d, *a.h);
    p = StrategyParams::digraph_growth(a.t, *a.h, static_cast<long>(q));
    j["strategy"] = "growth";
  } else {
    p = StrategyParams::digraph_outdegree(a.t, static_cast<long>(digraph_min_q(d)));
    j["strategy"] = "outdegree";
  }
  DigraphEvasionOptions opt;
  opt.cops = a.cops;
  opt.start = a.start;
  opt.strict = !a.no_strict;
  opt.keep_trace = !a.trace.empty() || !a.steps.empty();
  opt.digon_exception = a.digon == "on";
  const long m = a.cops.value_or(p.capacity);
  auto policy = make_cop_policy<Digraph>(a.adversary, d, static_cast<int>(m), a.seed, SolverOptions{c.state_budget});
  auto r = a.h ? simulate_evasion_digraph_growth(d, policy, p, a.rounds, opt)
               : simulate_evasion_outdegree(d, policy, p, a.rounds, opt);
  j["n"] = d.order();
  j["arcs"] = d.size();
  j["digons"] = d.digons().size();
  evasion_result(j, r);
  write_traces(r, a, j);
  return j;
}

inline json dispersion_cmd(const std::string& graph, int t, const std::string& digon, bool lemmas, const Common& c) {
  auto ld = load_digraph(graph);
  const auto& d = ld.digraph;
  auto j = header("dispersion", {{"graph", graph}, {"t", t}, {"digon_exception", digon}, {"lemmas", lemmas},
                                 {"trap_budget", c.trap_budget}});
  DispersionOptions opt;
  opt.digon_exception = digon == "on";
  opt.budget = c.trap_budget;
  auto cert = is_t_dispersed(d, t, opt);
  j["n"] = d.order();
  j["arcs"] = d.size();
  j["digons"] = d.digons().size();
  json cj;
  cj["t"] = cert.t;
  cj["dispersed"] = cert.dispersed;
  cj["digon_exception"] = cert.digon_exception;
  using W = DispersionCertificate::Witness;
  cj["witness"] = cert.witness == W::none ? "none" : cert.witness == W::disjoint_traps ? "disjoint_traps" : "arc_trap";
  cj["first"] = cert.first ? trap_json(*cert.first) : json(nullptr);
  cj["second"] = cert.second ? trap_json(*cert.second) : json(nullptr);
  cj["arc"] = cert.arc ? json::array({cert.arc->first, cert.arc->second}) : json(nullptr);
  cj["pairs_checked"] = cert.pairs_checked;
  cj["traps_examined"] = cert.traps_examined;
  DistanceOracle oracle(d);
  cj["witness_valid"] = cert.validate(oracle);
  j["certificate"] = cj;
  if (lemmas) {
    json lj = json::array();
    if (cert.dispersed) {
      lj.push_back(lemma_json(check_lemma_unique_geodesic(oracle, t, opt.digon_exception)));
      lj.push_back(lemma_json(check_lemma_same_outneighbor(oracle, t, c.trap_budget)));
      lj.push_back(lemma_json(check_lemma_rho_decrease(oracle, t, opt.digon_exception, c.trap_budget)));
    }
    j["lemmas"] = lj;
  }
  add_labels(j, ld.labels);
  return j;
}

inline json spectral_cmd(const std::string& graph, double gamma) {
  auto lg = load_graph(graph);
  const auto& g = lg.graph;
  auto j = header("spectral", {{"graph", graph}, {"gamma", gamma}});
  auto rep = second_eigenvalue(g);
  j["n"] = rep.n;
  j["d"] = rep.d;
  j["lambda2"] = rep.lambda2;
  j["residual"] = rep.residual;
  j["alpha"] = rep.alpha;
  j["ramanujan"] = rep.ramanujan;
  j["ramanujan_bound"] = 2 * std::sqrt(static_cast<double>(rep.d - 1));
  j["bipartite"] = rep.bipartite;
  j["lambda_min"] = rep.lambda_min;
  if (rep.bipartite) {
    auto prof = spectral_hgamma_bound(rep, gamma);
    j["hgamma_limit"] = prof.limit;
    json pj;
    pj["gamma"] = prof.gamma;
    pj["set_cap"] = prof.set_cap;
    pj["epsilon"] = rational_json(prof.epsilon);
    pj["epsilon_value"] = to_double(prof.epsilon);
    pj["lambda"] = rational_json(prof.lambda);
    pj["quarter_limit"] = prof.quarter_limit;
    pj["saturated"] = prof.saturated;
    json rows = json::array();
    for (const auto& [s, b] : prof.profile) rows.push_back({{"s", s}, {"bound", rational_json(b)}, {"value", to_double(b)}});
    pj["profile"] = rows;
    j["hgamma_certified_profile"] = pj;
  } else {
    j["hgamma_limit"] = nullptr;
    j["hgamma_certified_profile"] = nullptr;
    j["note"] = "the certified profile needs a bipartite graph";
  }
  if (g.order() <= kSubsetCap) {
    auto exact = h_gamma_bruteforce(g, gamma);
    j["hgamma_exact"] = {{"value", rational_json(*exact.exact)}, {"witness", exact.witness}};
  }
  add_labels(j, lg.labels);
  return j;
}

inline json lps_cmd(long p, long q, std::size_t max_n, const std::string& export_path) {
  auto j = header("lps", {{"p", p}, {"q", q}, {"max_n", max_n}, {"export", export_path}});
  auto out = lps_graph(LpsParams{p, q, max_n});
  const auto& r = out.report;
  json pr;
  pr["p"] = r.p;
  pr["q"] = r.q;
  pr["d"] = r.d;
  pr["n"] = r.n;
  pr["expected_n"] = r.expected_n;
  pr["vertex_formula"] = "q(q^2-1)";
  pr["regular"] = r.regular;
  pr["bipartite"] = r.bipartite;
  pr["connected"] = r.connected;
  pr["girth"] = r.girth;
  pr["girth_bound"] = r.girth_bound;
  pr["girth_ok"] = r.girth_ok;
  pr["lambda2"] = r.lambda2;
  pr["lambda2_residual"] = r.lambda2_residual;
  pr["ramanujan_bound"] = 2 * std::sqrt(static_cast<double>(r.d - 1));
  pr["ramanujan"] = r.ramanujan;
  pr["conditions"] = r.conditions;
  pr["verified"] = r.ok();
  j["provenance"] = pr;
  if (!export_path.empty()) {
    auto f = open_output(export_path);
    write_edge_list(f, out.graph);
  }
  if (!r.ok()) throw InternalError("LPS verification failed: " + j.dump());
  return j;
}

struct CaptureArgs {
  double delta_slack = 0.1;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  double gamma = 0.3;
  std::optional<double> eps;
  unsigned threads = 1;
  std::vector<std::string> robbers{"stationary", "random", "greedy"};
  std::optional<std::size_t> samples;
};

// Certified epsilon: spectral for bipartite graphs, exhaustive when tiny.
inline std::pair<double, std::string> certified_eps(const Graph& g, double gamma, const std::optional<double>& given) {
  if (given) return {*given, "given"};
  if (g.order() <= kSubsetCap) return {to_double(*h_gamma_bruteforce(g, gamma).exact), "exact"};
  auto rep = second_eigenvalue(g);
  if (!rep.bipartite) throw PreconditionError("no certified expansion for a large non-bipartite graph; pass --eps");
  return {to_double(spectral_hgamma_bound(rep, gamma).epsilon), "spectral"};
}

inline json expander_capture_cmd(const std::string& graph, const CaptureArgs& a) {
  auto lg = load_graph(graph);
  const auto& g = lg.graph;
  auto j = header("expander-capture", {{"graph", graph},
                                       {"delta_slack", a.delta_slack},
                                       {"trials", a.trials},
                                       {"seed", a.seed},
                                       {"gamma", a.gamma},
                                       {"eps", a.eps ? json(*a.eps) : json(nullptr)},
                                       {"robbers", a.robbers},
                                       {"samples", a.samples ? json(*a.samples) : json("all")}});
  auto [eps, source] = certified_eps(g, a.gamma, a.eps);
  auto p = make_expander_params(g.order(), static_cast<long>(g.max_degree()), eps, a.gamma, a.delta_slack, a.seed);
  add_ball_checks(g, p);
  MonteCarloOptions mo;
  mo.capture_samples = a.samples.value_or(std::numeric_limits<std::size_t>::max());
  mo.robbers = a.robbers;
  mo.threads = a.threads;
  auto res = monte_carlo_capture_rate(g, p, a.trials, mo);
  j["n"] = p.n;
  j["max_degree"] = p.max_degree;
  j["eps"] = eps;
  j["eps_source"] = source;
  j["kappa"] = p.kappa;
  j["r"] = p.r;
  j["p_raw"] = p.p_raw;
  j["p_prob"] = p.p_prob;
  j["clamped"] = p.clamped;
  j["cops"] = res.mean_cops;
  j["chernoff_cap"] = p.chernoff_cap();
  j["success_rate"] = res.success_rate;
  j["ci95"] = {res.ci95.lo, res.ci95.hi};
  j["mean_capture_round"] = res.mean_capture_round;
  j["trials"] = res.trials;
  j["successes"] = res.successes;
  j["pair_successes"] = res.pair_successes;
  j["pairs"] = res.pairs;
  j["runs"] = res.runs;
  j["escapes"] = res.escapes;
  j["plan_violations"] = res.plan_violations;
  j["hall_failures"] = res.hall_failures;
  j["hall_unverified"] = res.hall_unverified;
  j["first_failures"] = res.first_failures;
  json checks = json::array();
  for (const auto& ch : p.checks) checks.push_back({{"name", ch.name}, {"holds", ch.holds}, {"lhs", ch.lhs}, {"rhs", ch.rhs}});
  j["checks"] = checks;
  j["warnings"] = p.warnings;
  return j;
}

inline json meyniel_json(long max_degree, double eps) {
  try {
    auto m = weak_meyniel_exponent(max_degree, eps);
    return {{"eps", eps}, {"corollary", m.corollary}, {"theorem", m.theorem}};
  } catch (const InvalidInput& e) {
    return {{"eps", eps}, {"corollary", nullptr}, {"theorem", nullptr}, {"note", e.what()}};
  }
}

inline json exponent_report_cmd(const std::string& graph, double gamma, double delta_slack) {
  auto lg = load_graph(graph);
  const auto& g = lg.graph;
  auto j = header("exponent-report", {{"graph", graph}, {"gamma", gamma}, {"delta_slack", delta_slack}});
  auto rep = second_eigenvalue(g);
  auto gr = girth_exponent_report(g, rep);
  j["n"] = gr.n;
  j["d"] = gr.d;
  j["p"] = gr.p;
  j["girth"] = gr.girth;
  j["lambda2"] = gr.lambda2;
  j["upper"] = {{"limit_exponent", gr.upper_limit_exponent},
                {"n_exponent", gr.upper_n_exponent},
                {"cops", gr.upper_cops},
                {"girth_exponent", gr.upper_girth_exponent}};
  j["n_girth_exponent"] = gr.n_girth_exponent;
  j["lower"] = {{"t", gr.lower_t}, {"cops", gr.lower_cops}, {"girth_exponent", gr.lower_girth_exponent}};
  if (rep.bipartite) {
    auto prof = spectral_hgamma_bound(rep, gamma);
    const double eps = to_double(prof.epsilon);
    const double D = static_cast<double>(gr.d);
    const double n = static_cast<double>(gr.n);
    const double growth = std::log1p(eps) / std::log(D - 1);
    const double kappa_slack = (0.5 - 2 * delta_slack) * growth;
    const double kappa_limit = 0.5 * growth;
    j["expansion"] = {{"epsilon", eps}, {"epsilon_limit", prof.limit}};
    j["meyniel_with_slack"] = meyniel_json(gr.d, eps);
    j["meyniel_limit"] = meyniel_json(gr.d, prof.limit);
    j["capture_with_slack"] = {{"kappa", kappa_slack},
                               {"cop_exponent", 1 - kappa_slack},
                               {"cops", std::pow(n, 1 - kappa_slack) * std::pow(std::log(n), 3)}};
    j["capture_limit"] = {{"kappa", kappa_limit}, {"cop_exponent", 1 - kappa_limit}};
  } else {
    j["note"] = "expansion-based exponents need a bipartite graph";
  }
  return j;
}

// ------------------------------------------------------------ driver

inline void resource_hint(std::ostream& err, const ResourceError& e, const Common& c) {
  err << "budgets: state budget " << c.state_budget << " (--state-budget or COPSROBBERS_STATE_BUDGET), trap budget "
      << c.trap_budget << " per pair (--trap-budget)";
  if (e.required()) err << "; required at least " << e.required();
  err << '\n';
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cops and robbers: exact solver, robber strategies, dispersion, expansion and expander capture"};
  app.set_help_flag("--help", "print help");  // -h is taken by --h
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Common c;
  app.add_option("--format", c.format, "summary format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--state-budget", c.state_budget, "exact solver state budget");
  app.add_option("--trap-budget", c.trap_budget, "trap enumeration budget per ordered pair");

  std::function<json()> action;
  std::string graph;

  auto* girth_app = app.add_subcommand("girth", "exact girth");
  girth_app->add_option("graph", graph, "edge-list file or generator spec")->required();
  girth_app->callback([&] { action = [&] { return girth_cmd(graph); }; });

  int kmax = 0;
  auto* cn = app.add_subcommand("cop-number", "exact cop number by retrograde analysis");
  cn->add_option("graph", graph)->required();
  cn->add_option("--kmax", kmax, "largest cop count tried")->required();
  cn->callback([&] { action = [&] { return cop_number_cmd(graph, kmax, c); }; });

  EvasionArgs ev;
  auto evasion_opts = [&](CLI::App* s, bool digraph) {
    s->add_option("graph", graph)->required();
    s->add_option("--t", ev.t, "strategy depth t")->required();
    s->add_option("--h", ev.h, "growth version with this h");
    s->add_option("--adversary", ev.adversary)->check(CLI::IsMember({"greedy", "random", "optimal", "stationary"}));
    s->add_option("--rounds", ev.rounds, "states to play");
    s->add_option("--cops", ev.cops, "cop count (default: the strategy capacity)");
    s->add_option("--start", ev.start, "starting vertex of the cops");
    s->add_option("--seed", ev.seed);
    s->add_option("--trace", ev.trace, "write the per-state TSV trace here");
    s->add_flag("--no-strict", ev.no_strict, "play even when preconditions fail");
    if (digraph) {
      s->add_option("--steps", ev.steps, "write the per-step TSV trace here");
      s->add_option("--digon-exception", ev.digon)->check(CLI::IsMember({"on", "off"}));
    }
  };
  auto* vlb = app.add_subcommand("verify-lower-bound", "undirected robber strategies with ledger auditing");
  evasion_opts(vlb, false);
  vlb->callback([&] { action = [&] { return verify_lower_bound_cmd(graph, ev, c); }; });
  auto* vlbd = app.add_subcommand("verify-lower-bound-digraph", "digraph robber strategies with ledger auditing");
  evasion_opts(vlbd, true);
  vlbd->callback([&] { action = [&] { return verify_lower_bound_digraph_cmd(graph, ev, c); }; });

  int disp_t = 1;
  std::string digon = "on";
  bool lemmas = false;
  auto* disp = app.add_subcommand("dispersion", "t-dispersion certificate");
  disp->add_option("graph", graph, "arc-list file or digraph spec")->required();
  disp->add_option("--t", disp_t)->required();
  disp->add_option("--digon-exception", digon)->check(CLI::IsMember({"on", "off"}));
  disp->add_flag("--lemmas", lemmas, "also run the trap lemma checks");
  disp->callback([&] { action = [&] { return dispersion_cmd(graph, disp_t, digon, lemmas, c); }; });

  double gamma = 0.5;
  auto* spec = app.add_subcommand("spectral", "second eigenvalue and expansion profile");
  spec->add_option("graph", graph)->required();
  spec->add_option("--gamma", gamma);
  spec->callback([&] { action = [&] { return spectral_cmd(graph, gamma); }; });

  long lp = 5, lq = 13;
  std::size_t max_n = LpsParams{}.max_n;
  std::string export_path;
  auto* lps = app.add_subcommand("lps", "LPS Ramanujan graph with verification");
  lps->add_option("--p", lp)->required();
  lps->add_option("--q", lq)->required();
  lps->add_option("--max-n", max_n);
  lps->add_option("--export", export_path, "write the edge list here");
  lps->callback([&] { action = [&] { return lps_cmd(lp, lq, max_n, export_path); }; });

  CaptureArgs ca;
  auto* cap = app.add_subcommand("expander-capture", "random cop sets and matching-based capture");
  cap->add_option("graph", graph)->required();
  cap->add_option("--delta-slack", ca.delta_slack);
  cap->add_option("--trials", ca.trials);
  cap->add_option("--seed", ca.seed);
  cap->add_option("--gamma", ca.gamma);
  cap->add_option("--eps", ca.eps, "expansion constant (default: certified)");
  cap->add_option("--threads", ca.threads);
  cap->add_option("--robbers", ca.robbers)->check(CLI::IsMember({"stationary", "random", "greedy"}));
  cap->add_option("--samples", ca.samples, "plans executed per trial (default: all)");
  cap->callback([&] { action = [&] { return expander_capture_cmd(graph, ca); }; });

  double er_gamma = 0.3, er_delta = 0.1;
  auto* er = app.add_subcommand("exponent-report", "finite-n exponent arithmetic");
  er->add_option("graph", graph)->required();
  er->add_option("--gamma", er_gamma);
  er->add_option("--delta-slack", er_delta);
  er->callback([&] { action = [&] { return exponent_report_cmd(graph, er_gamma, er_delta); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code(ErrorKind::invalid_input);
  }
  try {
    emit(out, action(), c.format);
    return 0;
  } catch (const ResourceError& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    resource_hint(err, e, c);
    return exit_code(e.kind());
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error (internal): " << e.what() << '\n';
    return exit_code(ErrorKind::internal);
  }
}

}  // namespace copsrobbers::cli
