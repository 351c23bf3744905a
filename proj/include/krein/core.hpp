#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace krein {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

// A jump record (x_j, M(x_j)): position and the cumulative mass held by the
// string on [0, x_j].
struct Jump {
  double position = 0.0;
  double value = 0.0;

  friend bool operator==(const Jump&, const Jump&) = default;
};

/**
 * Piecewise-constant, right-continuous, non-decreasing mass distribution.
 *
 * The canonical form always starts at position 0 (with value 0 when there is
 * no atom at the origin) and carries a strictly positive mass increment at
 * every other jump. An optional terminal point L marks where the string
 * acquires infinite mass (the tying constant); without one the string has
 * finite total mass and extends to infinity.
 *
 * Instances are immutable. Build them with validate_string().
 */
class DiscreteString {
 public:
  const std::vector<Jump>& jumps() const noexcept { return jumps_; }
  std::optional<double> terminal() const noexcept { return terminal_; }
  std::size_t size() const noexcept { return jumps_.size(); }

  // Mass carried by the j-th jump, y_j - y_{j-1} with y_{-1} = 0.
  double mass(std::size_t j) const {
    return j == 0 ? jumps_[0].value : jumps_[j].value - jumps_[j - 1].value;
  }

  // First position carrying positive mass (the infimum c of the points of
  // increase). Equals the terminal point for a massless string.
  double first_increase() const noexcept {
    for (std::size_t j = 0; j < jumps_.size(); ++j)
      if (mass(j) > 0.0) return jumps_[j].position;
    return terminal_.value_or(infinity);
  }

  friend bool operator==(const DiscreteString&, const DiscreteString&) = default;

  friend DiscreteString validate_string(std::vector<Jump> raw,
                                        std::optional<double> terminal);
  friend DiscreteString detail_canonical(std::vector<Jump> jumps,
                                         std::optional<double> terminal);

 private:
  DiscreteString(std::vector<Jump> jumps, std::optional<double> terminal)
      : jumps_(std::move(jumps)), terminal_(terminal) {}

  std::vector<Jump> jumps_;
  std::optional<double> terminal_;
};

/// Checks the raw jump list and returns it in canonical form.
///
/// A leading (0, 0) record is inserted when the first position is positive,
/// and non-leading records that add no mass are dropped. A record sitting
/// exactly at the terminal point is accepted only if it adds no mass.
inline DiscreteString validate_string(std::vector<Jump> raw,
                                      std::optional<double> terminal) {
  for (const auto& j : raw) {
    if (!std::isfinite(j.position) || !std::isfinite(j.value))
      throw std::invalid_argument("string entries must be finite");
    if (j.position < 0.0 || j.value < 0.0)
      throw std::invalid_argument("string entries must be non-negative");
  }
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (!(raw[i].position > raw[i - 1].position))
      throw std::invalid_argument("string positions must be strictly increasing");
    if (raw[i].value < raw[i - 1].value)
      throw std::invalid_argument("string values must be non-decreasing");
  }

  std::vector<Jump> jumps;
  jumps.reserve(raw.size() + 1);
  if (raw.empty() || raw.front().position > 0.0) jumps.push_back({0.0, 0.0});
  for (const auto& j : raw) {
    if (!jumps.empty() && j.value == jumps.back().value) continue;
    jumps.push_back(j);
  }

  if (terminal) {
    const double L = *terminal;
    if (std::isnan(L) || L < 0.0)
      throw std::invalid_argument("terminal point must be non-negative");
    if (std::isinf(L)) {
      terminal.reset();
    } else {
      if (L < jumps.back().position)
        throw std::invalid_argument("terminal point precedes the last jump");
      if (L == jumps.back().position) {
        if (jumps.size() == 1)
          throw std::invalid_argument("terminal point at the origin leaves no string");
        throw std::invalid_argument("jump at the terminal point carries mass");
      }
    }
  }
  if (!terminal && jumps.back().value == 0.0)
    throw std::invalid_argument("string carries no mass and has no terminal point");

  return DiscreteString(std::move(jumps), terminal);
}

// Canonical form for records produced by the algorithms here, where
// round-off may land two records on the same position or value: equal
// positions keep the later record and values are clamped to be monotone.
// Inputs are otherwise trusted.
inline DiscreteString detail_canonical(std::vector<Jump> jumps, std::optional<double> terminal) {
  std::vector<Jump> out;
  out.reserve(jumps.size());
  for (const auto& j : jumps) {
    if (out.empty()) {
      out.push_back(j);
      continue;
    }
    const double value = std::max(j.value, out.back().value);
    if (j.position <= out.back().position) {
      out.back().value = value;
      continue;
    }
    if (value == out.back().value) continue;
    out.push_back({j.position, value});
  }
  if (terminal && *terminal <= out.back().position) {
    if (out.size() == 1) throw std::domain_error("terminal point collapsed onto the origin");
    out.pop_back();
  }
  return DiscreteString(std::move(out), terminal);
}

namespace detail {
inline DiscreteString canonical_string(std::vector<Jump> jumps, std::optional<double> terminal) {
  return detail_canonical(std::move(jumps), terminal);
}
}  // namespace detail

/// Right-continuous step lookup; +inf at and beyond the terminal point.
inline double eval_mass(const DiscreteString& s, double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("eval_mass requires x >= 0");
  if (s.terminal() && x >= *s.terminal()) return infinity;
  const auto& jumps = s.jumps();
  std::size_t lo = 0, hi = jumps.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (jumps[mid].position <= x)
      lo = mid;
    else
      hi = mid;
  }
  return jumps[lo].value;
}

struct TotalMass {
  double finite = 0.0;      // supremum of the finite jump values
  bool terminal = false;    // string ends in a point of infinite mass
};

inline TotalMass total_mass(const DiscreteString& s) {
  return {s.jumps().back().value, s.terminal().has_value()};
}

enum class CfForm { krein, stieltjes };

inline const char* to_string(CfForm form) {
  return form == CfForm::krein ? "krein" : "stieltjes";
}

/**
 * Finite continued fraction with coefficients s_0, ..., s_n.
 *
 * KREIN form:      s_0/(-z) + 1/(s_1 + 1/(s_2/(-z) + 1/(s_3 + ...)))
 * STIELTJES form:  1/(-s_0 z + 1/(s_1 + 1/(-s_2 z + ...)))
 *
 * Admissible coefficients satisfy s_0 >= 0 and s_j > 0 for j >= 1.
 */
class ContinuedFraction {
 public:
  ContinuedFraction(CfForm form, std::vector<double> coefficients)
      : form_(form), coefficients_(std::move(coefficients)) {
    if (coefficients_.empty())
      throw std::invalid_argument("continued fraction needs at least one coefficient");
    for (std::size_t j = 0; j < coefficients_.size(); ++j) {
      const double s = coefficients_[j];
      if (!std::isfinite(s))
        throw std::invalid_argument("coefficient s_" + std::to_string(j) + " is not finite");
      if (s < 0.0)
        throw std::invalid_argument("coefficient s_" + std::to_string(j) + " is negative");
      if (j > 0 && s == 0.0)
        throw std::invalid_argument("coefficient s_" + std::to_string(j) + " is zero");
    }
  }

  CfForm form() const noexcept { return form_; }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return coefficients_.size(); }
  double operator[](std::size_t j) const { return coefficients_[j]; }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  CfForm form_;
  std::vector<double> coefficients_;
};

}  // namespace krein
