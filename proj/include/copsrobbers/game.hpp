#pragma once

// Cop adversaries shared by the strategy simulators. A policy sees the whole
// position (perfect information) and returns the cops' next positions in the
// same order as the current ones.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "copsrobbers/distance.hpp"
#include "copsrobbers/errors.hpp"
#include "copsrobbers/exact_solver.hpp"
#include "copsrobbers/graph.hpp"

namespace copsrobbers {

template <GameGraph G>
struct GameView {
  const G& graph;
  std::span<const Vertex> cops;
  Vertex robber;
  long round;
};

template <GameGraph G>
using CopPolicy = std::function<std::vector<Vertex>(const GameView<G>&)>;

template <GameGraph G>
bool in_closed_out_neighborhood(const G& g, Vertex from, Vertex to) {
  if (from == to) return true;
  auto nb = g.out_neighbors(from);
  return std::binary_search(nb.begin(), nb.end(), to);
}

// Checks a proposed cop move; throws AdversaryFault when it is illegal.
template <GameGraph G>
void validate_cop_move(const G& g, std::span<const Vertex> before, std::span<const Vertex> after) {
  if (before.size() != after.size())
    throw AdversaryFault("cop policy returned " + std::to_string(after.size()) + " positions for " +
                         std::to_string(before.size()) + " cops");
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (after[i] < 0 || static_cast<std::size_t>(after[i]) >= g.order())
      throw AdversaryFault("cop " + std::to_string(i) + " moved to invalid vertex " + std::to_string(after[i]));
    if (!in_closed_out_neighborhood(g, before[i], after[i]))
      throw AdversaryFault("cop " + std::to_string(i) + " jumped from " + std::to_string(before[i]) + " to " +
                           std::to_string(after[i]));
  }
}

template <GameGraph G>
CopPolicy<G> stationary_cops() {
  return [](const GameView<G>& view) { return std::vector<Vertex>(view.cops.begin(), view.cops.end()); };
}

// Each cop independently picks a uniformly random vertex of its closed out-neighbourhood.
template <GameGraph G>
CopPolicy<G> random_cops(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const GameView<G>& view) {
    std::vector<Vertex> next;
    for (Vertex c : view.cops) {
      auto nb = view.graph.out_neighbors(c);
      std::uniform_int_distribution<std::size_t> pick(0, nb.size());
      auto i = pick(*rng);
      next.push_back(i == nb.size() ? c : nb[i]);
    }
    return next;
  };
}

// Shortest-path pursuit: every cop steps to a closed out-neighbour nearest to
// the robber (ties to the lowest id).
template <GameGraph G>
CopPolicy<G> greedy_cops() {
  return [](const GameView<G>& view) {
    auto to_robber = reverse_bfs_distances(view.graph, view.robber);
    std::vector<Vertex> next;
    for (Vertex c : view.cops) {
      Vertex best = c;
      Hops best_d = to_robber[static_cast<std::size_t>(c)];
      for (Vertex w : view.graph.out_neighbors(c)) {
        Hops d = to_robber[static_cast<std::size_t>(w)];
        if (d < best_d || (d == best_d && w < best)) {
          best = w;
          best_d = d;
        }
      }
      next.push_back(best);
    }
    return next;
  };
}

// Optimal play from a solved table. In robber-win positions no move helps, and
// the cops fall back to greedy pursuit.
template <GameGraph G>
CopPolicy<G> optimal_cops(std::shared_ptr<const CopsRobbersSolver<G>> solver) {
  auto fallback = greedy_cops<G>();
  return [solver, fallback](const GameView<G>& view) {
    if (solver->is_cop_win(view.cops, view.robber, Side::cops)) return solver->best_cop_move(view.cops, view.robber);
    return fallback(view);
  };
}

// Built-in policies by name: stationary, random, greedy, optimal.
template <GameGraph G>
CopPolicy<G> make_cop_policy(const std::string& name, const G& g, int cops, std::uint64_t seed,
                             SolverOptions options = {}) {
  if (name == "stationary") return stationary_cops<G>();
  if (name == "random") return random_cops<G>(seed);
  if (name == "greedy") return greedy_cops<G>();
  if (name == "optimal") {
    if (cops == 0) return stationary_cops<G>();
    return optimal_cops<G>(std::make_shared<const CopsRobbersSolver<G>>(g, cops, options));
  }
  throw InvalidInput("unknown cop policy '" + name + "' (stationary, random, greedy, optimal)");
}

}  // namespace copsrobbers
