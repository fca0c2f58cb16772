// Every invariant of the trefoil's strong inversion, computed directly from the library.
#include "twobridge/twobridge.hpp"

#include <iostream>

int main() {
  using namespace twobridge;
  InversionPair inv = inversions_from_fraction(3, 2);
  const I1Presentation &p = inv.inv1;
  std::cout << p.str() << " presents K(" << knot_fraction(p).str() << ")\n";
  std::cout << "butterfly polynomial  " << butterfly_polynomial(p).str() << "\n";
  AxisLinking lk = axis_linking(p);
  std::cout << "axis linking          K " << lk.lk_K << ", aK " << lk.lk_aK << "\n";
  std::cout << "slice obstruction     " << to_string(equivariant_slice_obstruction(p).verdict) << "\n";
  std::cout << "Conway(K)             " << conway_polynomial(knot_diagram(p)).str() << "\n";
  OrderCertificate c = order_certificate(p);
  std::cout << "Conway(L^_b)          " << c.conway_lhat.str() << "  det " << c.determinant_lhat << "\n";
  std::cout << "moth polynomial       " << c.moth.str() << "\n";
  std::cout << "order                 " << to_string(c.verdict) << "\n";
}
