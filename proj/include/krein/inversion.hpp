#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "krein/core.hpp"

namespace krein {

/**
 * Reconstructs the discrete string whose Krein-form continued fraction has
 * exactly the coefficients s_0, ..., s_n.
 *
 * The string is built level by level along
 *
 *   M[s_n] -> M[s_{n-1}, s_n] -> ... -> M[s_0, ..., s_n],
 *
 * where each step takes the dual of the previous string and applies the time
 * change x = int_0^t (1 + s M*)^2 with values M* / (1 + s M*). On piecewise
 * constant strings this reduces to closed-form updates of the jump records
 * (x_j, y_j), so only the previous level is kept. Level m holds floor(m/2)+1
 * records when m is even and floor(m/2)+2 when m is odd; odd levels start
 * with the empty plateau y_0 = 0.
 *
 * Intermediate levels can stretch to positions of order 1e15 while their
 * values crowd against 1/s, so the mass increments are carried directly:
 *
 *   y_j - y_{j-1} = (x_j - x_{j-1}) / ((1 + s x_j)(1 + s x_{j-1})),
 *   1/s - y_k     = 1 / (s (1 + s x_k)),
 *
 * which keeps every update a sum or product of positive terms. The tail
 * strings themselves are genuinely huge for large coefficients (a run of
 * forty unit coefficients already places an atom near 1e22), so the levels
 * are carried in long double for its wider exponent range. Positions that
 * overflow even that range become +inf and are handled through the limits
 * of the update formulas; their mass is below any resolvable increment.
 *
 * The final level divides by s_0; when s_0 = 0 the last record would carry
 * infinite mass and becomes the terminal point instead.
 *
 * Cost is O(n^2) arithmetic and O(n) memory.
 */
inline DiscreteString invert(const ContinuedFraction& cf) {
  if (cf.form() != CfForm::krein)
    throw std::invalid_argument("invert expects a Krein-form continued fraction");
  const auto& s = cf.coefficients();
  const std::size_t n = s.size() - 1;
  if (n == 0) {
    if (s[0] == 0.0) throw std::invalid_argument("the expansion W = 0 has no string");
    return validate_string({{0.0, 1.0 / s[0]}}, std::nullopt);
  }

  // Per level: positions x, gaps dx (dx[0] = 0) and masses dm (dm[0] = y_0).
  using Real = long double;
  struct Level {
    std::vector<Real> x, dx, dm;
    void reset() {
      x.assign(1, 0.0);
      dx.assign(1, 0.0);
      dm.clear();
    }
  };
  Level cur, next;
  for (Level* l : {&cur, &next}) {
    l->x.reserve(n / 2 + 2);
    l->dx.reserve(n / 2 + 2);
    l->dm.reserve(n / 2 + 2);
  }
  cur.reset();
  cur.dm.push_back(Real(1) / s[n]);

  for (std::size_t level = 1; level <= n; ++level) {
    const Real c = s[n - level];
    next.reset();
    const std::size_t k = cur.x.size() - 1;
    const auto& x = cur.x;

    // Plateaus of the dual: heights x_j over [y_{j-1}, y_j), i.e. of length
    // dm[j]; on odd levels an extra empty plateau of length y_0 comes first.
    if (level % 2 == 1) next.dm.push_back(0.0);
    const std::size_t first = level % 2 == 1 ? 0 : 1;
    for (std::size_t j = first; j <= k; ++j) {
      const Real g = 1 + c * x[j];
      const Real gap = j == 0 ? cur.dm[0] : cur.dm[j] == 0 ? Real(0) : g * g * cur.dm[j];
      next.dx.push_back(gap);
      next.x.push_back(next.x.back() + gap);
    }
    // Values x_j/(1 + c x_j) of the dual plateaus as increments, then the
    // final value 1/c. Past the range of Real a record sits at infinity: the
    // first such record takes the remaining mass up to 1/c, later ones none.
    for (std::size_t j = 1; j <= k; ++j) {
      Real dm = 0;
      if (std::isinf(x[j - 1]))
        dm = 0;
      else if (std::isinf(x[j]))
        dm = c > 0 ? 1 / (c * (1 + c * x[j - 1])) : infinity;
      else
        dm = cur.dx[j] / ((1 + c * x[j]) * (1 + c * x[j - 1]));
      next.dm.push_back(dm);
    }
    if (c > 0) next.dm.push_back(std::isinf(x[k]) ? Real(0) : 1 / (c * (1 + c * x[k])));

    std::swap(cur, next);
  }

  // Values from increments; the last one is exactly 1/s_0. Records beyond
  // double range carry no resolvable mass and are dropped.
  const auto& x = cur.x;
  std::size_t records = x.size();
  while (records > 1 && !std::isfinite(static_cast<double>(x[records - 1]))) --records;
  const bool truncated = records < x.size();
  std::vector<Jump> jumps;
  jumps.reserve(records);
  Real y = 0;
  for (std::size_t j = 0; j + 1 < records; ++j) {
    y += cur.dm[j];
    jumps.push_back({static_cast<double>(x[j]), static_cast<double>(y)});
  }
  std::optional<double> terminal;
  if (truncated) {
    y += cur.dm[records - 1];
    if (s[0] > 0.0) y = std::min(y, Real(1) / s[0]);
    jumps.push_back({static_cast<double>(x[records - 1]), static_cast<double>(y)});
  } else if (s[0] == 0.0) {
    terminal = static_cast<double>(x.back());
  } else {
    jumps.push_back({static_cast<double>(x.back()), 1.0 / s[0]});
  }
  return detail::canonical_string(std::move(jumps), terminal);
}

}  // namespace krein
