// The butterfly polynomial cannot tell these presentations apart; the moth polynomial can.
#include "twobridge/twobridge.hpp"

#include <iostream>

int main() {
  using namespace twobridge;
  for (const char *s : {"2,-2,2,-2;1,1,-1,1", "2,-2,2,-2;2,3,-2,5", "4,-4,4,-4;1,-1,-1,2"}) {
    I1Presentation p = parse_i1(s);
    std::cout << p.str() << "\n  butterfly " << butterfly_polynomial(p).str() << "\n  moth      "
              << moth_polynomial(p).str() << "\n";
  }
}
