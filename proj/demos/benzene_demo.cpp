// Computes the Hosoya index of the benzene skeleton (a staggered ring with
// three single and three double bonds, one branch per ring vertex) four ways
// and prints the derivation trace of a small cycle.

#include <iostream>

#include "hosoya/contfrac.hpp"
#include "hosoya/families.hpp"
#include "hosoya/oracle.hpp"

int main() {
  using namespace hosoya;

  RingParams benzene{/*n=*/3, /*m=*/1, /*r=*/2, /*s=*/1};

  std::cout << "benzene: M = " << benzene.M() << ", rs = " << benzene.rs() << "\n";
  std::cout << "matching oracle:        " << hosoya_index(ring_graph(benzene)) << "\n";

  Convergent c = eval_negative_ring_cf(benzene.M(), benzene.rs(), benzene.n);
  std::cout << "backward fraction:      " << c.p << "/" << c.q << " -> " << c.p << "\n";

  std::cout << "closed-form recurrence: " << ring_hosoya_closed(benzene, benzene.n) << "\n";

  auto [f_part, g_part] = ring_decomposition_parts(benzene);
  BigInt split = hosoya_index(caterpillar_bond(f_part)) +
                 BigInt(benzene.s) * hosoya_index(caterpillar_bond(g_part));
  std::cout << "ring decomposition:     " << split << "\n\n";

  HosoyaTrace trace = hosoya_trace(cycle_graph(4));
  std::cout << "derivation of Z(C_4):\n" << format_trace(trace);
  return 0;
}
