#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "copsrobbers/generators.hpp"
#include "copsrobbers/spectral.hpp"

using namespace copsrobbers;

namespace {

// Second-largest value of the dense spectrum.
double dense_lambda2(const Graph& g) {
  auto s = dense_spectrum(g);
  return s[s.size() - 2];
}

}  // namespace

TEST(Spectral, CompleteGraph) {
  auto rep = second_eigenvalue(complete_graph(4));
  EXPECT_NEAR(rep.lambda2, -1.0, 1e-8);
  EXPECT_FALSE(rep.bipartite);
}

TEST(Spectral, EightCycle) {
  auto rep = second_eigenvalue(cycle_graph(8));
  EXPECT_NEAR(rep.lambda2, 2 * std::cos(2 * std::numbers::pi / 8), 1e-8);
  EXPECT_TRUE(rep.bipartite);
  EXPECT_TRUE(rep.symmetry_ok);
  EXPECT_LE(rep.residual, 1e-8);
}

TEST(Spectral, Petersen) {
  auto rep = second_eigenvalue(petersen());
  EXPECT_NEAR(rep.lambda2, 1.0, 1e-8);
  EXPECT_NEAR(rep.lambda2, dense_lambda2(petersen()), 1e-8);
}

TEST(Spectral, MatchesDenseOracle) {
  for (const auto& name : {"heawood", "mcgee", "tutte_coxeter", "hoffman_singleton", "cubic_girth9", "tutte12"}) {
    auto g = named_fixture(name);
    auto rep = second_eigenvalue(g);
    EXPECT_NEAR(rep.lambda2, dense_lambda2(g), 1e-7) << name;
    EXPECT_LE(rep.residual, 1e-8) << name;
    if (rep.bipartite) {
      auto s = dense_spectrum(g);
      EXPECT_NEAR(s.front(), -static_cast<double>(rep.d), 1e-8);
      EXPECT_TRUE(rep.symmetry_ok) << name;
    }
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = random_regular(60, 4, seed);
    if (!g.connected()) continue;
    EXPECT_NEAR(second_eigenvalue(g).lambda2, dense_lambda2(g), 1e-7) << seed;
  }
}

TEST(Spectral, Preconditions) {
  EXPECT_THROW(second_eigenvalue(path_graph(4)), PreconditionError);
  std::vector<Edge> e{{0, 1}, {2, 3}};
  EXPECT_THROW(second_eigenvalue(Graph::from_edges(4, e)), PreconditionError);
}

TEST(Spectral, KTwo) {
  auto rep = second_eigenvalue(complete_graph(2));
  EXPECT_DOUBLE_EQ(rep.lambda2, -1.0);
}
