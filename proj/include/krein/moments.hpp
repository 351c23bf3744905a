#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "krein/core.hpp"

namespace krein {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Moments c_k = int lambda^k dsigma of a measure on [0, inf), held exactly.
class MomentSequence {
 public:
  explicit MomentSequence(std::vector<Rational> moments) : moments_(std::move(moments)) {
    if (moments_.empty()) throw std::invalid_argument("moment sequence is empty");
    if (moments_[0] <= 0) throw std::invalid_argument("moment c_0 must be positive");
    for (const auto& c : moments_)
      if (c < 0) throw std::invalid_argument("moments of a positive measure are non-negative");
  }

  const std::vector<Rational>& moments() const noexcept { return moments_; }
  std::size_t size() const noexcept { return moments_.size(); }

 private:
  std::vector<Rational> moments_;
};

/// Parses "p/q", "p" or "-p/q" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  auto parse_int = [&text](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational '" + text + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("malformed rational '" + text + "'");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational '" + text + "'");
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline std::string format_rational(const Rational& r) {
  const Integer den = boost::multiprecision::denominator(r);
  const std::string num = boost::multiprecision::numerator(r).str();
  return den == 1 ? num : num + "/" + den.str();
}

/// Stieltjes-form coefficients recovered from moments, kept exact.
struct StieltjesExpansion {
  std::vector<Rational> coefficients;
  // The remainder vanished identically: the measure has finitely many atoms
  // and the fraction ends here.
  bool terminated = false;

  ContinuedFraction fraction() const {
    std::vector<double> s(coefficients.size());
    std::transform(coefficients.begin(), coefficients.end(), s.begin(),
                   [](const Rational& r) { return r.convert_to<double>(); });
    return ContinuedFraction(CfForm::stieltjes, std::move(s));
  }
};

namespace detail {

// Reciprocal of a truncated power series with a nonzero constant term.
inline std::vector<Rational> series_reciprocal(const std::vector<Rational>& a) {
  std::vector<Rational> b(a.size());
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= i; ++k) acc += a[k] * b[i - k];
    b[i] = -acc * inv0;
  }
  return b;
}

}  // namespace detail

/**
 * Stieltjes' expansion of a moment sequence into
 *
 *   1/(-s_0 z + 1/(s_1 + 1/(-s_2 z + ...)))
 *
 * by successive reciprocals of the formal series in w = -1/z,
 *
 *   int dsigma/(lambda - z) = sum_k (-1)^k c_k w^{k+1}.
 *
 * Even steps peel off s/w, odd steps a constant s. Every step consumes one
 * known term, so m+1 moments yield at most m+1 coefficients. All arithmetic
 * is exact; the Hankel-type recursions are hopeless in floating point.
 *
 * Throws std::domain_error if a coefficient comes out non-positive, which
 * means the input is not the moment sequence of a positive measure.
 */
inline StieltjesExpansion coefficients_from_moments(const MomentSequence& m) {
  // Current series, stored without its leading power of w: even steps see
  // w * a(w), odd steps see a(w).
  std::vector<Rational> series(m.size());
  for (std::size_t k = 0; k < m.size(); ++k)
    series[k] = (k % 2 == 0) ? m.moments()[k] : Rational(-m.moments()[k]);

  StieltjesExpansion out;
  for (std::size_t step = 0; !series.empty(); ++step) {
    if (series[0] == 0) {
      const bool all_zero =
          std::all_of(series.begin(), series.end(), [](const Rational& r) { return r == 0; });
      if (!all_zero)
        throw std::domain_error("expansion breaks down at s_" + std::to_string(step) +
                                ": not a Stieltjes moment sequence");
      out.terminated = true;
      break;
    }
    std::vector<Rational> inv = detail::series_reciprocal(series);
    if (inv[0] <= 0)
      throw std::domain_error("non-positive coefficient s_" + std::to_string(step) +
                              ": not a Stieltjes moment sequence");
    out.coefficients.push_back(inv[0]);
    // Drop the peeled term; what remains starts one power of w higher
    // (w^0 after an even step, w^1 after an odd step).
    series.assign(inv.begin() + 1, inv.end());
  }
  return out;
}

enum class Determinacy { terminating, divergence_observed, inconclusive };

inline const char* to_string(Determinacy d) {
  switch (d) {
    case Determinacy::terminating: return "terminating (determinate)";
    case Determinacy::divergence_observed: return "divergence observed";
    case Determinacy::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

struct DeterminacyReport {
  std::vector<double> partial_sums;  // partial_sums[N] = s_0 + ... + s_N
  Determinacy verdict = Determinacy::inconclusive;
  std::string text;
};

/**
 * Partial sums of the coefficient series, the quantity whose divergence
 * decides convergence of the infinite fraction.
 *
 * Finitely many terms can never prove divergence. The report says
 * "divergence observed" when the second half of the window contributes at
 * least as much as the first half (the terms are not decaying on average),
 * and "inconclusive" otherwise. A fraction shorter than the requested window
 * has terminated.
 */
inline DeterminacyReport determinacy_diagnostic(const ContinuedFraction& cf, std::size_t count) {
  DeterminacyReport r;
  const auto& s = cf.coefficients();
  const std::size_t upto = std::min(count, s.size() - 1);
  double acc = 0.0;
  for (std::size_t k = 0; k <= upto; ++k) r.partial_sums.push_back(acc += s[k]);

  if (s.size() <= count || s.size() == 1) {
    r.verdict = Determinacy::terminating;
    r.text = to_string(r.verdict);
    return r;
  }
  const std::size_t half = upto / 2;
  const double head = r.partial_sums[half];
  const double tail = r.partial_sums[upto] - head;
  r.verdict = tail >= head ? Determinacy::divergence_observed : Determinacy::inconclusive;
  r.text = r.verdict == Determinacy::divergence_observed
               ? "divergence observed up to N=" + std::to_string(upto)
               : std::string("inconclusive");
  return r;
}

}  // namespace krein
