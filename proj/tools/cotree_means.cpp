// Global and local means of a few cographs, straight from their cotrees.
#include <iostream>

#include "cogmean/polynomial.hpp"

int main() {
  using namespace cogmean;
  for (const char* text : {"J(L,L,L)", "J(L,U(L,L,L))", "J(L,U(L,J(L,L,L)))", "J(U(L,L),U(L,L,L,L))"}) {
    const Cotree t = parse_cotree(text);
    const SubgraphPolynomial phi = phi_cotree(t);
    std::cout << format_cotree(t) << "  n=" << t.leaf_count() << "  mean=" << to_string(global_mean(phi))
              << "  M*=" << to_string(mstar_mean(phi)) << "\n";
    for (int leaf = 0; leaf < t.leaf_count(); ++leaf)
      std::cout << "    leaf " << leaf << " local mean " << to_string(global_mean(phi_local_cotree(t, leaf))) << "\n";
  }
}
