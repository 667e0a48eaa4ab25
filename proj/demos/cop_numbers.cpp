// Exact cop numbers of a few small graphs.
#include <iostream>

#include "copsrobbers/copsrobbers.hpp"

using namespace copsrobbers;

int main() {
  struct Named {
    const char* name;
    Graph g;
  };
  std::vector<Named> graphs{{"path:6", path_graph(6)},       {"cycle:4", cycle_graph(4)},
                            {"cycle:9", cycle_graph(9)},     {"petersen", petersen()},
                            {"heawood", heawood()},          {"K_{3,3}", complete_bipartite(3, 3)}};
  for (const auto& [name, g] : graphs) {
    auto res = cop_number(g, 3);
    std::cout << name << ": n=" << g.order() << " girth=";
    if (auto gi = girth(g)) std::cout << *gi; else std::cout << "inf";
    std::cout << " cop number " << res.cop_number << " (" << res.states_explored << " states, captured within "
              << res.capture_depth << " rounds)\n";
  }
}
