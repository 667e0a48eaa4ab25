// Build X^{5,13} and print its certificate.
#include <iostream>

#include "copsrobbers/copsrobbers.hpp"

using namespace copsrobbers;

int main() {
  auto lg = lps_graph(LpsParams{5, 13});
  const auto& r = lg.report;
  std::cout << "n=" << r.n << " d=" << r.d << " bipartite=" << r.bipartite << " girth=" << r.girth
            << " (needs >= " << r.girth_bound << ") lambda2=" << r.lambda2 << " ramanujan=" << r.ramanujan
            << " ok=" << r.ok() << "\n";
}
