#pragma once

#include <stdexcept>

#include "krein/core.hpp"

namespace krein {

namespace detail {
inline void require_negative(double z) {
  if (!(z < 0.0)) throw std::invalid_argument("spectral parameter z must be negative");
}
}  // namespace detail

/// Characteristic function W(z) of a discrete string, z < 0.
///
/// Runs the Krein expansion from the right end of the string. The seed is
/// W(x_last+) = L - x_last when a terminal point exists; otherwise the tail
/// is an infinite massless segment and 1/W(x_last+) = 0. Each point mass
/// applies W(x_j-) = 1/(-m_j z + 1/W(x_j+)) and each gap adds its length.
inline double eval_w_string(const DiscreteString& s, double z) {
  detail::require_negative(z);
  const auto& jumps = s.jumps();
  const std::size_t last = jumps.size() - 1;

  double reciprocal = 0.0;
  if (const auto L = s.terminal()) reciprocal = 1.0 / (*L - jumps[last].position);

  double w = 0.0;
  for (std::size_t j = last + 1; j-- > 0;) {
    w = 1.0 / (-s.mass(j) * z + reciprocal);
    if (j > 0) w += jumps[j].position - jumps[j - 1].position;
    reciprocal = 1.0 / w;
  }
  return w;
}

/// Bottom-up evaluation of a finite continued fraction in its tagged form.
inline double eval_cf(const ContinuedFraction& cf, double z) {
  detail::require_negative(z);
  const auto& s = cf.coefficients();
  const double mz = -z;
  std::size_t j = s.size() - 1;

  // Even-indexed terms carry the spectral parameter: s_j/(-z) in Krein form,
  // -s_j z in Stieltjes form. Odd-indexed terms are plain lengths.
  auto term = [&](std::size_t k) {
    if (k % 2 == 1) return s[k];
    return cf.form() == CfForm::krein ? s[k] / mz : s[k] * mz;
  };

  double tail = term(j);
  while (j-- > 0) tail = term(j) + 1.0 / tail;
  return cf.form() == CfForm::krein ? tail : 1.0 / tail;
}

/// Laplace exponent of the inverse local time, Theta(lambda) = 1/W(-lambda).
inline double levy_exponent(const ContinuedFraction& cf, double lambda) {
  if (cf.form() != CfForm::krein)
    throw std::invalid_argument("levy_exponent expects a Krein-form fraction");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  return 1.0 / eval_cf(cf, -lambda);
}

}  // namespace krein
