// Genus-one and genus-two free energies, their Eisenstein closed forms, and
// how fast L_N approaches the first two terms of its genus expansion.

#include <array>
#include <iostream>
#include <variant>

#include "cuegenus/cuegenus.hpp"

int main() {
  using namespace cuegenus;
  const int D = 20;
  const GenusTable F = f_table(D, 2);

  std::cout << "F_1 (exponential coefficients):";
  for (int d = 1; d <= 8; ++d) std::cout << ' ' << F.at(d, 1);
  std::cout << '\n';

  const QSeries f2 = genus_series(F, 2);
  const FitResult fit = fit_quasimodular(f2, 6, 6, D);
  if (const auto* p = std::get_if<QuasimodularPoly>(&fit)) {
    std::cout << "F_2 = " << p->to_string() << '\n';
  } else {
    std::cout << std::get<FitFailure>(fit).message() << '\n';
  }

  const std::array<int, 3> Ns{4, 8, 16};
  for (const auto& row : convergence_table(0.1, Ns, 1, F, D)) {
    std::cout << "N=" << row.N << "  |L_N - F_1 at q=0.1| = " << row.scaled_value << '\n';
  }
}
