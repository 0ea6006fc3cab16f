// Monotone Hurwitz numbers from content sums, recounted by brute force.

#include <iostream>

#include "cuegenus/cuegenus.hpp"

int main() {
  using namespace cuegenus;
  const GenusTable H = k_genus_table(4, 2);
  const GenusTable F = f_table(4, 2);
  std::cout << "d g   H(formula) H(oracle)   F(formula) F(oracle)\n";
  for (int d = 1; d <= 4; ++d) {
    for (int g = 1; g <= 2; ++g) {
      std::cout << d << ' ' << g << "   " << H.at(d, g) << ' ' << count_configs({d, g, true, false}) << "   "
                << F.at(d, g) << ' ' << count_configs({d, g, true, true}) << '\n';
    }
  }
}
