#pragma once

#include <stdexcept>
#include <vector>

#include "krein/core.hpp"

namespace krein {

/**
 * Dual string M*(x) = inf{t : M(t) > x}, the right-continuous inverse of M.
 *
 * Plateau heights of M become jump positions of M* and vice versa. A finite
 * total mass Y without terminal point turns into a terminal point at Y; a
 * terminal point L turns into the final plateau value L. The characteristic
 * functions satisfy W*(z) = 1/(-z W(z)).
 */
inline DiscreteString dual(const DiscreteString& s) {
  const auto& jumps = s.jumps();
  std::vector<Jump> out;
  out.reserve(jumps.size() + 1);

  // M* takes the value x_j on [y_{j-1}, y_j); when y_0 = 0 the record at
  // the origin is overwritten (right-continuity).
  auto push = [&out](double position, double value) {
    if (!out.empty() && out.back().position == position)
      out.back().value = value;
    else
      out.push_back({position, value});
  };
  push(0.0, 0.0);
  for (std::size_t j = 1; j < jumps.size(); ++j) push(jumps[j - 1].value, jumps[j].position);

  std::optional<double> terminal;
  if (s.terminal())
    push(jumps.back().value, *s.terminal());
  else
    terminal = jumps.back().value;

  return validate_string(std::move(out), terminal);
}

/**
 * Removes the atom at 0 from the principal spectral function.
 *
 * M^(x) = M(t)/(1 - M(t)/m) with x = int_0^t (1 - M/m)^2, m = M(inf-). Over
 * a plateau of height y the time change advances by (1 - y/m)^2 times the
 * plateau length. The final plateau (y = m) collapses to a terminal point.
 */
inline DiscreteString remove_zero_atom(const DiscreteString& s) {
  if (s.terminal())
    throw std::invalid_argument("remove_zero_atom requires finite total mass");
  const auto& jumps = s.jumps();
  if (jumps.size() == 1)
    throw std::invalid_argument("remove_zero_atom: a single atom at the origin is degenerate");

  const double total = jumps.back().value;
  std::vector<Jump> out;
  out.reserve(jumps.size() - 1);
  double x = 0.0;
  for (std::size_t j = 0; j + 1 < jumps.size(); ++j) {
    const double y = jumps[j].value;
    const double deficit = 1.0 - y / total;
    out.push_back({x, y / deficit});
    x += deficit * deficit * (jumps[j + 1].position - jumps[j].position);
  }
  return validate_string(std::move(out), x);
}

/// Toggles the evaluation rule; coefficients are untouched.
inline ContinuedFraction flip_form(const ContinuedFraction& cf) {
  return ContinuedFraction(cf.form() == CfForm::krein ? CfForm::stieltjes : CfForm::krein,
                           cf.coefficients());
}

}  // namespace krein
