#include <gtest/gtest.h>

#include <random>

#include "copsrobbers/exact_solver.hpp"
#include "copsrobbers/generators.hpp"
#include "copsrobbers/graph_algorithms.hpp"

using namespace copsrobbers;

namespace {

// Plain value iteration over ordered cop tuples, no symmetry reduction and no
// retrograde bookkeeping: sweep until nothing changes.
template <GameGraph G>
bool naive_cop_win(const G& g, int k) {
  const std::size_t n = g.order();
  std::size_t tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= n;
  auto decode = [&](std::size_t t) {
    std::vector<Vertex> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i, t /= n) c[static_cast<std::size_t>(i)] = static_cast<Vertex>(t % n);
    return c;
  };
  auto encode = [&](const std::vector<Vertex>& c) {
    std::size_t t = 0;
    for (int i = k - 1; i >= 0; --i) t = t * n + static_cast<std::size_t>(c[static_cast<std::size_t>(i)]);
    return t;
  };
  auto closed = [&](Vertex v) {
    std::vector<Vertex> out{v};
    for (Vertex w : g.out_neighbors(v)) out.push_back(w);
    return out;
  };
  auto caught = [&](const std::vector<Vertex>& c, Vertex r) { return std::find(c.begin(), c.end(), r) != c.end(); };
  // win[side][tuple * n + r]
  std::vector<char> win_cops(tuples * n, 0), win_robber(tuples * n, 0);
  for (std::size_t t = 0; t < tuples; ++t)
    for (std::size_t r = 0; r < n; ++r)
      if (caught(decode(t), static_cast<Vertex>(r))) win_cops[t * n + r] = win_robber[t * n + r] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t < tuples; ++t) {
      auto c = decode(t);
      for (std::size_t r = 0; r < n; ++r) {
        auto rv = static_cast<Vertex>(r);
        if (!win_robber[t * n + r]) {
          bool all = true;
          for (Vertex w : closed(rv)) all = all && win_cops[t * n + static_cast<std::size_t>(w)];
          if (all) win_robber[t * n + r] = 1, changed = true;
        }
        if (!win_cops[t * n + r]) {
          // Enumerate all joint moves.
          std::vector<std::vector<Vertex>> opts;
          for (Vertex ci : c) opts.push_back(closed(ci));
          std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
          bool found = false;
          while (!found) {
            std::vector<Vertex> next(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) next[static_cast<std::size_t>(i)] = opts[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
            if (win_robber[encode(next) * n + r]) found = true;
            int i = 0;
            while (i < k && ++idx[static_cast<std::size_t>(i)] == opts[static_cast<std::size_t>(i)].size()) idx[static_cast<std::size_t>(i++)] = 0;
            if (i == k) break;
          }
          if (found) win_cops[t * n + r] = 1, changed = true;
        }
      }
    }
  }
  for (std::size_t t = 0; t < tuples; ++t) {
    bool all = true;
    for (std::size_t r = 0; r < n; ++r) all = all && win_cops[t * n + r];
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST(Multiset, RankIsBijective) {
  detail::MultisetIndex idx(7, 3);
  EXPECT_EQ(idx.count(), 84u);  // C(9,3)
  std::vector<char> seen(idx.count(), 0);
  for (Vertex a = 0; a < 7; ++a)
    for (Vertex b = a; b < 7; ++b)
      for (Vertex c = b; c < 7; ++c) {
        std::vector<Vertex> m{a, b, c};
        auto r = idx.rank(m);
        ASSERT_LT(r, idx.count());
        EXPECT_FALSE(seen[r]);
        seen[r] = 1;
        EXPECT_EQ(idx.unrank(r), m);
      }
}

TEST(Solver, TreesAreCopWin) {
  for (std::uint64_t s = 0; s < 10; ++s) EXPECT_TRUE(k_cop_win(random_tree(15, s), 1));
}

TEST(Solver, FourCycle) {
  EXPECT_FALSE(k_cop_win(cycle_graph(4), 1));
  EXPECT_TRUE(k_cop_win(cycle_graph(4), 2));
}

TEST(Solver, PetersenNeedsThree) {
  EXPECT_FALSE(k_cop_win(petersen(), 2));
  EXPECT_TRUE(k_cop_win(petersen(), 3));
}

TEST(CopNumber, Examples) {
  EXPECT_EQ(cop_number(path_graph(6), 3).cop_number, 1);
  EXPECT_EQ(cop_number(cycle_graph(5), 3).cop_number, 2);
  EXPECT_EQ(cop_number(heawood(), 3).cop_number, 3);
  EXPECT_EQ(cop_number(complete_graph(6), 2).cop_number, 1);
}

TEST(CopNumber, BoundExceeded) {
  try {
    cop_number(petersen(), 2);
    FAIL();
  } catch (const BoundExceeded& e) {
    EXPECT_EQ(e.k_max(), 2);
    EXPECT_EQ(e.kind(), ErrorKind::resource);
  }
}

TEST(Solver, BudgetNamesRequirement) {
  SolverOptions opt;
  opt.state_budget = 1000;
  try {
    CopsRobbersSolver<Graph> s(petersen(), 2, opt);
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.required(), 2000u);  // 2 * 10^3
    EXPECT_NE(std::string(e.what()).find("2000"), std::string::npos);
  }
}

TEST(Solver, Preconditions) {
  std::vector<Edge> e{{0, 1}};
  EXPECT_THROW(k_cop_win(Graph::from_edges(3, e), 1), PreconditionError);
  EXPECT_THROW(k_cop_win(petersen(), 0), InvalidInput);
}

TEST(Solver, AgreesWithValueIteration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 5 + trial % 5;
    std::vector<Edge> e;
    std::bernoulli_distribution coin(0.4);
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 2; j < n; ++j)
        if (coin(rng)) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    auto g = Graph::from_edges(n, e);
    for (int k = 1; k <= 2; ++k) EXPECT_EQ(k_cop_win(g, k), naive_cop_win(g, k)) << "trial " << trial << " k " << k;
  }
  EXPECT_EQ(k_cop_win(petersen(), 2), naive_cop_win(petersen(), 2));
}

TEST(Solver, DigraphsAgreeWithValueIteration) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto d = random_digraph(7, 0.35, seed);
    if (!d.connected()) continue;
    for (int k = 1; k <= 2; ++k) EXPECT_EQ(k_cop_win(d, k), naive_cop_win(d, k)) << "seed " << seed << " k " << k;
  }
}

TEST(Solver, DirectedCycle) {
  for (std::size_t n = 3; n <= 8; ++n) {
    EXPECT_FALSE(k_cop_win(directed_cycle(n), 1)) << n;
    EXPECT_TRUE(k_cop_win(directed_cycle(n), 2)) << n;
  }
  EXPECT_TRUE(k_cop_win(directed_cycle(2), 1));
}

TEST(Solver, MonotoneInK) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto g = random_regular(10, 3, seed);
    if (!g.connected()) continue;
    bool prev = false;
    for (int k = 1; k <= 3; ++k) {
      bool w = k_cop_win(g, k);
      if (prev) {
        EXPECT_TRUE(w);
      }
      prev = w;
    }
  }
}

TEST(Solver, AignerFrommeLowerBound) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto g = high_girth_regular(16 + 2 * (seed % 3), 3, 5, seed);
    if (!g.connected()) continue;
    ASSERT_GE(*girth(g), 5);
    ++checked;
    EXPECT_FALSE(k_cop_win(g, 2)) << "seed " << seed;
  }
  EXPECT_GT(checked, 3);
}

TEST(Solver, DepthInvariants) {
  auto g = petersen();
  CopsRobbersSolver<Graph> s(g, 3);
  // A cop-win position with cops to move has a move to a strictly shallower one.
  for (Vertex a = 0; a < 10; ++a)
    for (Vertex b = a; b < 10; ++b)
      for (Vertex c = b; c < 10; ++c)
        for (Vertex r = 0; r < 10; ++r) {
          std::vector<Vertex> cops{a, b, c};
          int d = s.depth(cops, r, Side::cops);
          if (d <= 0) continue;
          auto next = s.best_cop_move(cops, r);
          EXPECT_EQ(s.depth(next, r, Side::robber), d - 1);
        }
}

TEST(Solver, ReplayAgainstRandomRobbers) {
  for (const auto& g : {petersen(), heawood(), cycle_graph(9)}) {
    int k = cop_number(g, 3).cop_number;
    CopsRobbersSolver<Graph> s(g, k);
    auto cops = s.best_initial_placement();
    std::mt19937_64 rng(99);
    for (int game = 0; game < 50; ++game) {
      std::vector<Vertex> c = cops;
      std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
      auto r = static_cast<Vertex>(pick(rng));
      if (std::find(c.begin(), c.end(), r) != c.end()) continue;
      int budget = s.depth(c, r, Side::cops);
      ASSERT_GE(budget, 0);
      int plies = 0;
      while (true) {
        c = s.best_cop_move(c, r);
        ++plies;
        if (std::find(c.begin(), c.end(), r) != c.end()) break;
        auto nb = g.neighbors(r);
        std::uniform_int_distribution<std::size_t> step(0, nb.size());
        auto j = step(rng);
        r = j == nb.size() ? r : nb[j];
        ++plies;
        if (std::find(c.begin(), c.end(), r) != c.end()) break;
        ASSERT_LE(plies, budget);
      }
      EXPECT_LE(plies, budget);
    }
  }
}

TEST(Solver, OptimalRobberSurvivesAgainstTooFewCops) {
  auto g = petersen();
  CopsRobbersSolver<Graph> s(g, 2);
  std::vector<Vertex> c{0, 5};
  Vertex r = s.best_robber_placement(c);
  for (int round = 0; round < 100; ++round) {
    c = s.best_cop_move(c, r);
    ASSERT_TRUE(std::find(c.begin(), c.end(), r) == c.end());
    r = s.best_robber_move(c, r);
    ASSERT_TRUE(std::find(c.begin(), c.end(), r) == c.end());
  }
}
