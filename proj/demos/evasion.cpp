// A robber on a 4-regular graph of girth >= 9 holding off greedy cops for 200 states.
#include <iostream>

#include "copsrobbers/copsrobbers.hpp"

using namespace copsrobbers;

int main() {
  Graph g = high_girth_regular(2000, 4, 9, 1);
  auto p = StrategyParams::degree(2, static_cast<long>(g.min_degree()));
  std::cout << "n=" << g.order() << " girth=" << *girth(g) << " q=" << p.q << " K=" << p.K
            << " capacity=" << p.capacity << "\n";
  for (const char* adv : {"stationary", "random", "greedy"}) {
    auto res = simulate_evasion_degree(g, make_cop_policy<Graph>(adv, g, static_cast<int>(p.capacity), 7), p, 200);
    std::cout << adv << ": survived=" << res.survived << " states=" << res.states
              << " violations=" << res.invariant_violations << "\n";
    if (adv == std::string("greedy")) write_trace_tsv(std::cout, {res.trace.begin(), res.trace.begin() + 5});
  }
}
