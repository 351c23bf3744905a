#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "krein/core.hpp"
#include "krein/generators.hpp"
#include "krein/inversion.hpp"

namespace krein {

using MassFunction = std::function<double(double)>;

/// Reference mass function for the metrics. Values are read as left limits
/// M(x-) so that a jump landing on a reference terminal point is compared
/// with the finite curve rather than with infinity.
inline MassFunction reference_function(Reference r) {
  return [r](double x) { return reference_left_limit(r, x); };
}

struct ErrorReport {
  double error = 0.0;
  std::size_t index = 0;     // jump index attaining the maximum
  double position = 0.0;     // x at that jump
  std::size_t points = 0;    // jumps compared
  double window = 0.0;
  bool averaged = false;
};

namespace detail {

template <class Estimate>
ErrorReport max_discrepancy(const DiscreteString& approx, const MassFunction& reference,
                            double window, std::size_t first, bool averaged, Estimate estimate) {
  if (!(window > 0.0)) throw std::invalid_argument("error window must be positive");
  const auto& jumps = approx.jumps();
  ErrorReport r;
  r.window = window;
  r.averaged = averaged;
  for (std::size_t j = first; j < jumps.size() && jumps[j].position < window; ++j) {
    const double e = std::abs(estimate(j) - reference(jumps[j].position));
    if (r.points == 0 || e > r.error) {
      r.error = e;
      r.index = j;
      r.position = jumps[j].position;
    }
    ++r.points;
  }
  if (r.points == 0) throw std::invalid_argument("no jumps inside the error window");
  return r;
}

}  // namespace detail

/// max_j |y_j - M(x_j)| over the jumps with x_j < window.
inline ErrorReport sup_error(const DiscreteString& approx, const MassFunction& reference,
                             double window = 5.0) {
  const auto& jumps = approx.jumps();
  return detail::max_discrepancy(approx, reference, window, 0, false,
                                 [&](std::size_t j) { return jumps[j].value; });
}

/// Same, with each step value replaced by the midpoint (y_{j-1} + y_j)/2 of
/// the jump at x_j; starts at j = 1.
inline ErrorReport averaged_error(const DiscreteString& approx, const MassFunction& reference,
                                  double window = 5.0) {
  const auto& jumps = approx.jumps();
  return detail::max_discrepancy(approx, reference, window, 1, true, [&](std::size_t j) {
    return 0.5 * (jumps[j - 1].value + jumps[j].value);
  });
}

struct StudyPoint {
  std::size_t n = 0;
  double error = 0.0;
};

struct ConvergenceStudy {
  std::vector<StudyPoint> points;
  double slope = 0.0;  // least-squares slope of log(error) against log(n)
};

/// Ordinary least-squares slope of log y against log x.
inline double loglog_slope(std::span<const StudyPoint> points) {
  const double count = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double lx = std::log(static_cast<double>(p.n));
    const double ly = std::log(p.error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

using CoefficientFamily = std::function<ContinuedFraction(std::size_t)>;

inline ConvergenceStudy convergence_study(const CoefficientFamily& family,
                                          std::span<const std::size_t> n_list,
                                          const MassFunction& reference, double window,
                                          bool averaged) {
  if (n_list.size() < 3) throw std::invalid_argument("a convergence study needs at least 3 sizes");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("study sizes must be strictly increasing");

  ConvergenceStudy study;
  for (const std::size_t n : n_list) {
    const DiscreteString approx = invert(family(n));
    const ErrorReport r = averaged ? averaged_error(approx, reference, window)
                                   : sup_error(approx, reference, window);
    if (!(r.error > 0.0))
      throw std::domain_error("zero error at n=" + std::to_string(n) + ": slope undefined");
    study.points.push_back({n, r.error});
  }
  study.slope = loglog_slope(study.points);
  return study;
}

}  // namespace krein
