#include <gtest/gtest.h>

#include <sstream>

#include "copsrobbers/generators.hpp"
#include "copsrobbers/girth_strategies.hpp"

using namespace copsrobbers;

namespace {

// e bracketed by rationals; K must satisfy K*e*t <= q^t < (K+1)*e*t.
const Rational kELow(2718281828, 1000000000);
const Rational kEHigh(2718281829, 1000000000);

std::vector<Vertex> at_distance(const Graph& g, Vertex from, Hops d) {
  auto dist = bfs_distances(g, from);
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < g.order(); ++w)
    if (dist[w] == d) out.push_back(static_cast<Vertex>(w));
  return out;
}

void expect_clean(const EvasionResult& r, long min_states) {
  EXPECT_TRUE(r.survived);
  EXPECT_EQ(r.invariant_violations, 0) << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_GE(r.states, min_states);
}

const Graph& hg4() {
  static const Graph g = high_girth_regular(2000, 4, 9, 1);
  return g;
}

}  // namespace

TEST(StrategyParams, DegreeValues) {
  auto p = StrategyParams::degree(2, 3);
  EXPECT_EQ(p.q, 2);
  EXPECT_EQ(p.r, Rational(1));
  EXPECT_EQ(p.K, 0);
  EXPECT_EQ(p.capacity, 1);
  EXPECT_EQ(p.girth_required, 9);
  auto p4 = StrategyParams::degree(2, 4);
  EXPECT_EQ(p4.r, Rational(3, 2));
  EXPECT_EQ(p4.K, 1);
  EXPECT_EQ(p4.capacity, 2);
  auto af = StrategyParams::degree(1, 7);
  EXPECT_EQ(af.K, 2);
  EXPECT_EQ(af.capacity, 6);
  EXPECT_EQ(af.candidates, 7);
  EXPECT_EQ(af.girth_required, 5);
  EXPECT_EQ(StrategyParams::growth(2, 3, 4).girth_required, 33);
}

TEST(StrategyParams, BoundChain) {
  for (long q = 1; q <= 12; ++q)
    for (int t = 1; t <= 5; ++t) {
      auto p = StrategyParams::growth(t, 1, q);
      Rational qt = pow(Rational(q), t);
      EXPECT_LE(Rational(p.K) * kELow * t, qt) << q << " " << t;
      EXPECT_GT(Rational(p.K + 1) * kEHigh * t, qt) << q << " " << t;
      EXPECT_LT(p.r, Rational(q));
      if (t >= 2) {
        EXPECT_LT(Rational(p.K), Rational(q) * pow(p.r, t - 1) / t);
        EXPECT_LE(p.K, p.capacity);
      }
    }
}

TEST(Classify, FarCopsAreUnclassified) {
  auto g = cubic_girth9();
  auto p = StrategyParams::degree(2, 3);
  Vertex v = 0, prev = g.neighbors(0)[0];
  auto far = at_distance(g, v, 5);
  ASSERT_GE(far.size(), 3u);
  std::vector<Vertex> cops(far.begin(), far.begin() + 3);
  auto L = classify_cops_degree(g, v, prev, cops, p);
  EXPECT_EQ(L.unclassified, 3);
  EXPECT_EQ(L.W, Rational(3));
  for (const auto& w : L.W_i) EXPECT_EQ(w, Rational(3, 2));
}

TEST(Classify, WeightsByDistance) {
  auto& g = hg4();
  auto p = StrategyParams::degree(2, 4);
  Vertex v = 0, prev = g.neighbors(0)[0];
  std::vector<Vertex> targets;
  for (Vertex w : g.neighbors(v))
    if (w != prev) targets.push_back(w);
  auto dv = bfs_distances(g, v);
  std::vector<Vertex> cops;
  // rho = 1 (on u_1), rho = 2 next to u_2, rho = 3 beyond u_3.
  cops.push_back(targets[0]);
  for (Vertex w : g.neighbors(targets[1]))
    if (dv[static_cast<std::size_t>(w)] == 2) {
      cops.push_back(w);
      break;
    }
  for (Vertex w : at_distance(g, targets[2], 2))
    if (dv[static_cast<std::size_t>(w)] == 3) {
      cops.push_back(w);
      break;
    }
  ASSERT_EQ(cops.size(), 3u);
  auto L = classify_cops_degree(g, v, prev, cops, p);
  EXPECT_EQ(L.unclassified, 0);
  EXPECT_EQ(L.cls, (std::vector<int>{0, 1, 2}));
  Rational r = p.r;
  EXPECT_EQ(L.weight[0], r);  // r^{t - ceil(1/2)}
  EXPECT_EQ(L.weight[1], r);  // r^{t-1}
  EXPECT_EQ(L.weight[2], Rational(1));
  Rational sum = 0;
  for (const auto& w : L.W_i) sum += w;
  EXPECT_EQ(sum, L.W);
  EXPECT_EQ(L.W, 2 * r + 1);
}

TEST(Classify, RhoThreeOnGirthNine) {
  auto g = cubic_girth9();
  auto p = StrategyParams::degree(2, 3);
  Vertex v = 0, prev = g.neighbors(0)[0];
  Vertex u1 = g.neighbors(0)[1];
  auto dv = bfs_distances(g, v);
  Vertex cop = -1;
  for (Vertex w : at_distance(g, u1, 2))
    if (dv[static_cast<std::size_t>(w)] == 3) cop = w;
  ASSERT_GE(cop, 0);
  std::vector<Vertex> cops{cop};
  auto L = classify_cops_degree(g, v, prev, cops, p);
  EXPECT_EQ(L.cls[0], 0);
  EXPECT_EQ(L.weight[0], Rational(1));
}

TEST(Classify, PreviousVertexExcluded) {
  auto g = cubic_girth9();
  auto p = StrategyParams::degree(2, 3);
  Vertex prev = g.neighbors(0)[1];
  std::vector<Vertex> none;
  auto L = classify_cops_degree(g, 0, prev, none, p);
  EXPECT_EQ(std::find(L.targets.begin(), L.targets.end(), prev), L.targets.end());
  EXPECT_TRUE(std::is_sorted(L.targets.begin(), L.targets.end()));
  EXPECT_THROW(classify_cops_degree(g, 0, at_distance(g, 0, 3)[0], none, p), InvalidInput);
  EXPECT_THROW(classify_cops_degree(petersen(), 0, 1, none, p), PreconditionError);
}

TEST(RobberStep, TiesGoToLowestId) {
  auto g = cubic_girth9();
  auto p = StrategyParams::degree(2, 3);
  std::vector<Vertex> none;
  auto L = classify_cops_degree(g, 0, g.neighbors(0)[0], none, p);
  EXPECT_EQ(robber_step_degree(L), 0u);
}

TEST(RobberStep, LightClassIsSafe) {
  auto& g = hg4();
  auto p = StrategyParams::degree(2, 4);
  Vertex v = 5, prev = g.neighbors(5)[0];
  std::vector<Vertex> targets(g.neighbors(v).begin() + 1, g.neighbors(v).end());
  auto dv = bfs_distances(g, v);
  std::vector<Vertex> cops;
  // Two cops at rho = 2 behind u_2 and two behind u_3; u_1 untouched.
  for (int i : {1, 2}) {
    int placed = 0;
    for (Vertex w : g.neighbors(targets[static_cast<std::size_t>(i)]))
      if (dv[static_cast<std::size_t>(w)] == 2 && placed < 2) cops.push_back(w), ++placed;
  }
  ASSERT_EQ(cops.size(), 4u);
  auto L = classify_cops_degree(g, v, prev, cops, p);
  EXPECT_EQ(L.W_i[0], Rational(0));
  EXPECT_EQ(L.W_i[1], 2 * p.r);
  EXPECT_EQ(L.W_i[2], 2 * p.r);
  auto j = robber_step_degree(L);
  ASSERT_EQ(j, 0u);
  Vertex u = L.targets[j];
  EXPECT_EQ(std::find(cops.begin(), cops.end(), u), cops.end());
  for (Vertex w : g.neighbors(u)) EXPECT_EQ(std::find(cops.begin(), cops.end(), w), cops.end());
}

TEST(DegreeEvasion, VacuousAtZeroBudget) {
  auto g = cubic_girth9();
  auto p = StrategyParams::degree(2, 3);
  EvasionOptions opt;
  opt.cops = p.K;
  auto r = simulate_evasion_degree(g, greedy_cops<Graph>(), p, 100, opt);
  EXPECT_TRUE(r.vacuous);
  expect_clean(r, 100);
}

TEST(DegreeEvasion, GirthNineOneCop) {
  auto g = cubic_girth9();
  auto p = StrategyParams::degree(2, 3);
  const long rounds = 10 * 60 * 60;
  Vertex v1 = g.neighbors(0)[0];
  auto solver = std::make_shared<const CopsRobbersSolver<Graph>>(g, 1);
  std::vector<Vertex> start{0};
  // Robber to move from v_1, as in the simulator's first state.
  EXPECT_FALSE(solver->is_cop_win(start, v1, Side::robber));
  expect_clean(simulate_evasion_degree(g, optimal_cops<Graph>(solver), p, rounds), rounds);
  expect_clean(simulate_evasion_degree(g, greedy_cops<Graph>(), p, 2000), 2000);
  expect_clean(simulate_evasion_degree(g, random_cops<Graph>(7), p, 2000), 2000);
}

TEST(DegreeEvasion, HoffmanSingletonTEqualsOne) {
  auto g = hoffman_singleton();
  auto p = StrategyParams::degree(1, 7);
  // Full capacity (6 cops) is beyond the exact solver; heuristic adversaries.
  auto greedy = simulate_evasion_degree(g, greedy_cops<Graph>(), p, 2000);
  EXPECT_EQ(greedy.cops, 6);
  expect_clean(greedy, 2000);
  for (std::uint64_t seed : {1, 2, 3}) expect_clean(simulate_evasion_degree(g, random_cops<Graph>(seed), p, 1000), 1000);
  // At the bound K = 2 the solver is cheap.
  auto solver = std::make_shared<const CopsRobbersSolver<Graph>>(g, p.K);
  std::vector<Vertex> start{0, 0};
  EXPECT_FALSE(solver->is_cop_win(start, g.neighbors(0)[0], Side::robber));
  EvasionOptions opt;
  opt.cops = p.K;
  const long rounds = 10 * 50 * 50;
  expect_clean(simulate_evasion_degree(g, optimal_cops<Graph>(solver), p, rounds, opt), rounds);
}

TEST(DegreeEvasion, PetersenAignerFromme) {
  auto g = petersen();
  auto p = StrategyParams::degree(1, 3);
  auto solver = std::make_shared<const CopsRobbersSolver<Graph>>(g, 2);
  expect_clean(simulate_evasion_degree(g, optimal_cops<Graph>(solver), p, 1000), 1000);
}

TEST(DegreeEvasion, FourRegularGirthNine) {
  auto& g = hg4();
  auto p = StrategyParams::degree(2, 4);
  expect_clean(simulate_evasion_degree(g, greedy_cops<Graph>(), p, 1500), 1500);
  expect_clean(simulate_evasion_degree(g, random_cops<Graph>(11), p, 1500), 1500);
  EvasionOptions opt;
  opt.cops = p.K;
  opt.start = 17;
  expect_clean(simulate_evasion_degree(g, greedy_cops<Graph>(), p, 1000, opt), 1000);
}

TEST(DegreeEvasion, CaptureIsReported) {
  // Two cops on a cycle exceed the capacity of 1: one waits, one chases.
  auto g = cycle_graph(12);
  auto p = StrategyParams::degree(1, 2);
  auto greedy = greedy_cops<Graph>();
  CopPolicy<Graph> pincer = [greedy](const GameView<Graph>& view) {
    auto next = greedy(view);
    next[0] = view.cops[0];
    return next;
  };
  EvasionOptions opt;
  opt.cops = 2;
  EXPECT_THROW(simulate_evasion_degree(g, pincer, p, 100, opt), PreconditionError);
  opt.strict = false;
  auto r = simulate_evasion_degree(g, pincer, p, 100, opt);
  EXPECT_FALSE(r.survived);
  EXPECT_GT(r.capture_state, 0);
  EXPECT_GT(r.invariant_violations, 0);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(DegreeEvasion, Preconditions) {
  auto p2 = StrategyParams::degree(2, 3);
  EXPECT_THROW(simulate_evasion_degree(petersen(), greedy_cops<Graph>(), p2, 10), PreconditionError);
  EvasionOptions opt;
  opt.cops = 2;
  EXPECT_THROW(simulate_evasion_degree(cubic_girth9(), greedy_cops<Graph>(), p2, 10, opt), PreconditionError);
  EXPECT_THROW(simulate_evasion_degree(cubic_girth9(), greedy_cops<Graph>(), StrategyParams::degree(2, 4), 10),
               PreconditionError);
  EXPECT_THROW(StrategyParams::degree(0, 3), InvalidInput);
}

TEST(DegreeEvasion, IllegalCopMoveFaults) {
  auto g = cubic_girth9();
  auto p = StrategyParams::degree(2, 3);
  CopPolicy<Graph> teleport = [](const GameView<Graph>& view) {
    return std::vector<Vertex>(view.cops.size(), static_cast<Vertex>((view.robber + 30) % 60));
  };
  try {
    simulate_evasion_degree(g, teleport, p, 10);
    FAIL();
  } catch (const AdversaryFault& e) {
    EXPECT_EQ(e.kind(), ErrorKind::adversary_fault);
  }
}

TEST(GrowthEvasion, HOneMatchesDegreeTrace) {
  struct Case {
    Graph g;
    StrategyParams deg;
  };
  for (const auto& c : {Case{cubic_girth9(), StrategyParams::degree(2, 3)}, Case{hg4(), StrategyParams::degree(2, 4)}}) {
    auto grow = StrategyParams::growth(2, 1, c.deg.q);
    for (std::uint64_t seed : {1, 2}) {
      auto a = simulate_evasion_degree(c.g, random_cops<Graph>(seed), c.deg, 500);
      auto b = simulate_evasion_growth(c.g, random_cops<Graph>(seed), grow, 500);
      ASSERT_EQ(a.trace.size(), b.trace.size());
      for (std::size_t i = 0; i < a.trace.size(); ++i) {
        EXPECT_EQ(a.trace[i].v, b.trace[i].v);
        EXPECT_EQ(a.trace[i].target, b.trace[i].target);
        EXPECT_EQ(a.trace[i].W, b.trace[i].W);
        EXPECT_EQ(a.trace[i].W_j, b.trace[i].W_j);
        EXPECT_EQ(a.trace[i].safe, b.trace[i].safe);
      }
    }
  }
}

TEST(GrowthEvasion, SubdividedTutteCage) {
  auto g = subdivide(tutte_12_cage(), 1);
  ASSERT_EQ(*girth(g), 24);
  for (int t : {1, 2}) {
    auto p = StrategyParams::growth(t, 2, 2);
    ASSERT_LE(p.girth_required, 24);
    auto r = simulate_evasion_growth(g, greedy_cops<Graph>(), p, 1500);
    expect_clean(r, 1500);
    EXPECT_EQ(r.robber_moves, 2 * 1500);
    expect_clean(simulate_evasion_growth(g, random_cops<Graph>(4), p, 1000), 1000);
  }
}

TEST(GrowthEvasion, WeightAtTwoH) {
  auto g = subdivide(tutte_12_cage(), 1);
  auto p = StrategyParams::growth(2, 2, 2);
  // Robber at an original vertex v, arrived from y two steps back.
  Vertex v = 0;
  auto d2 = at_distance(g, v, 2);
  Vertex y = d2[0];
  std::vector<Vertex> none;
  auto L0 = classify_cops_growth(g, v, y, none, p);
  ASSERT_EQ(L0.targets.size(), 2u);
  Vertex u = L0.targets[1];
  auto dv = bfs_distances(g, v);
  Vertex cop = -1;
  for (Vertex w : at_distance(g, u, 2))
    if (dv[static_cast<std::size_t>(w)] == 4) cop = w;
  ASSERT_GE(cop, 0);
  std::vector<Vertex> cops{cop};
  auto L = classify_cops_growth(g, v, y, cops, p);
  EXPECT_EQ(L.cls[0], 1);
  EXPECT_EQ(L.weight[0], p.r);  // r^{t-1}
}

TEST(GrowthEvasion, SubdividedPetersen) {
  auto g = subdivide(petersen(), 1);
  auto p = StrategyParams::growth(1, 2, 2);
  EvasionOptions opt;
  opt.cops = 2;
  EXPECT_THROW(simulate_evasion_growth(g, greedy_cops<Graph>(), p, 100, opt), PreconditionError);
  opt.strict = false;
  auto r = simulate_evasion_growth(g, greedy_cops<Graph>(), p, 2000, opt);
  EXPECT_TRUE(r.survived);
  EXPECT_EQ(r.warnings.size(), 2u);
  EXPECT_THROW(simulate_evasion_growth(g, greedy_cops<Graph>(), StrategyParams::growth(1, 2, 3), 10), PreconditionError);
}

TEST(Trace, TsvLayout) {
  auto r = simulate_evasion_degree(cubic_girth9(), greedy_cops<Graph>(), StrategyParams::degree(2, 3), 25);
  std::ostringstream out;
  write_trace_tsv(out, r.trace);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "state\tv_s\tu_j\tW\tmax_W_i\tmin_W_i\tsafety");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 6);
  }
  EXPECT_EQ(rows, 25);
}
