// Locate the first few critical-line zeros and check them with both evaluators.

#include <cstdio>

#include "zetalab/zetalab.hpp"

int main() {
  using namespace zetalab;
  for (const ZeroRecord& z : first_zeros(5, 1e-10)) {
    const double em = std::abs(zeta_em(EvalPoint(0.5, z.t), 1e-12).value);
    std::printf("t = %.10f  |eta| = %.2e  |zeta_em| = %.2e\n", z.t, z.residual, em);
  }
}
