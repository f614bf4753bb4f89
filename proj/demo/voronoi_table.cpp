// Prints E f_k of the typical Poisson-Voronoi cell for d = 2..max_d, exact and
// to 12 digits, and checks entry 0 against Moller's closed form.

#include "simplex_angles.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  using namespace simplex_angles;
  const int max_d = argc > 1 ? std::atoi(argv[1]) : 6;
  AngleEngine engine;
  for (int d = 2; d <= max_d; ++d) {
    const FVector f = voronoi_f_vector(engine, d);
    std::cout << "d = " << d << (f.entries[0] == moller_f0(d) ? "" : "  (f_0 disagrees with closed form!)") << '\n';
    for (int k = 0; k < d; ++k) {
      std::cout << "  f_" << k << " = " << f.entries[k].to_string() << "  ~ " << pi_eval(f.entries[k], 12) << '\n';
    }
  }
}
