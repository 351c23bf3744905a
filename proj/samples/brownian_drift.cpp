// Reconstructs the speed measure of Brownian motion with drift -2 from the
// continued fraction of its characteristic function and prints the jump
// points next to the exact curve M(x) = 2x/(1+4x).

#include <cmath>
#include <cstdio>
#include <numbers>

#include "krein/krein.hpp"

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 511;
  const double c_const = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const auto cf = krein::bessel_drift_coefficients(0.5, 2.0, c_const, n);
  const auto string = krein::invert(cf);

  std::printf("x,y,exact\n");
  for (const auto& j : string.jumps()) {
    if (j.position >= 5.0) break;
    std::printf("%.10g,%.10g,%.10g\n", j.position, j.value,
                krein::reference_mass(krein::Reference::bm_drift, j.position));
  }
  const auto fn = krein::reference_function(krein::Reference::bm_drift);
  std::fprintf(stderr, "n=%zu sup error %.3e, averaged %.3e\n", n,
               krein::sup_error(string, fn).error, krein::averaged_error(string, fn).error);
}
