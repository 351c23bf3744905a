#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "krein/core.hpp"

namespace krein {

/// [0, 1, 3, 5, ..., 2n-1]: the uniform string of unit length, whose
/// characteristic function is tanh(sqrt(-z))/sqrt(-z).
inline ContinuedFraction tanh_coefficients(std::size_t n) {
  if (n == 0) throw std::invalid_argument("tanh_coefficients requires n >= 1");
  std::vector<double> s(n + 1);
  s[0] = 0.0;
  for (std::size_t k = 1; k <= n; ++k) s[k] = 2.0 * static_cast<double>(k) - 1.0;
  return ContinuedFraction(CfForm::krein, std::move(s));
}

/**
 * Coefficients of W(z) = (alpha/gamma) / ((1 - z/beta)^alpha - 1), the
 * characteristic function of a Bessel process with drift, gamma =
 * C Gamma(1-alpha) beta^alpha:
 *
 *   s_{2j}   = (beta/gamma) [1-alpha]_{j-1} / [1+alpha]_{j-1} (2j+1)
 *   s_{2j+1} = 2 gamma [1+alpha]_{j-1} / [1-alpha]_j
 *
 * where [a]_m = a (a+1) ... (a+m) has m+1 factors, so [a]_{-1} = 1 is the
 * empty product. In terms of the usual rising factorial (a)_m this is
 * (1-alpha)_j/(1+alpha)_j (2j+1) and (1+alpha)_j/(1-alpha)_{j+1}; for
 * alpha = 1/2, beta = 2, gamma = 1 it gives the periodic sequence
 * 2, 4, 2, 4, ... of W(z) = (1 + sqrt(1 - z/2))/(-z).
 *
 * The ratios are carried as running products.
 */
inline ContinuedFraction bessel_drift_coefficients(double alpha, double beta, double c_const,
                                                   std::size_t n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (!(c_const > 0.0)) throw std::invalid_argument("C must be positive");

  const double gamma = c_const * std::tgamma(1.0 - alpha) * std::pow(beta, alpha);
  std::vector<double> s(n + 1);
  double even_ratio = 1.0;               // (1-alpha)_j / (1+alpha)_j
  double odd_ratio = 1.0 / (1.0 - alpha);  // (1+alpha)_j / (1-alpha)_{j+1}
  for (std::size_t j = 0; 2 * j <= n; ++j) {
    const double jd = static_cast<double>(j);
    if (j > 0) {
      even_ratio *= (1.0 - alpha + jd - 1.0) / (1.0 + alpha + jd - 1.0);
      odd_ratio *= (1.0 + alpha + jd - 1.0) / (1.0 - alpha + jd);
    }
    s[2 * j] = beta / gamma * even_ratio * (2.0 * jd + 1.0);
    if (2 * j + 1 <= n) s[2 * j + 1] = 2.0 * gamma * odd_ratio;
  }
  return ContinuedFraction(CfForm::krein, std::move(s));
}

/// The C with gamma = 1/2, the scaling under which alpha -> 0+ gives
/// W(z) = 2/ln(1 - z/beta).
inline double log_scaling_constant(double alpha, double beta) {
  return 1.0 / (2.0 * std::tgamma(1.0 - alpha) * std::pow(beta, alpha));
}

/// Termwise alpha -> 0+ limit of the Bessel-drift family with gamma = 1/2:
/// s_{2j} = 2 beta (2j+1), s_{2j+1} = 1/(j+1).
inline ContinuedFraction log_limit_coefficients(double beta, std::size_t n) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  std::vector<double> s(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const double j = static_cast<double>(k / 2);
    if (k % 2 == 0)
      s[k] = 2.0 * beta * (2.0 * j + 1.0);
    else
      s[k] = 1.0 / (j + 1.0);
  }
  return ContinuedFraction(CfForm::krein, std::move(s));
}

enum class Reference { bm_drift, uniform };

inline Reference reference_from_name(const std::string& name) {
  if (name == "bm-drift") return Reference::bm_drift;
  if (name == "uniform") return Reference::uniform;
  throw std::invalid_argument("unknown reference string '" + name + "'");
}

inline const char* to_string(Reference r) {
  return r == Reference::bm_drift ? "bm-drift" : "uniform";
}

/// Closed-form reference strings.
///   bm-drift: M(x) = 2x/(1+4x), Brownian motion with drift -2 in natural scale.
///   uniform:  M(x) = x on [0, 1), infinite from the terminal point L = 1.
inline double reference_mass(Reference r, double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("reference_mass requires x >= 0");
  switch (r) {
    case Reference::bm_drift:
      return std::isinf(x) ? 0.5 : 2.0 * x / (1.0 + 4.0 * x);
    case Reference::uniform:
      return x < 1.0 ? x : infinity;
  }
  return 0.0;
}

/// Left limit M(x-). Coincides with reference_mass away from the terminal point.
inline double reference_left_limit(Reference r, double x) {
  if (r == Reference::uniform && x >= 1.0) return x == 1.0 ? 1.0 : infinity;
  return reference_mass(r, x);
}

}  // namespace krein
