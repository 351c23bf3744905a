#pragma once

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "krein/core.hpp"
#include "krein/metrics.hpp"
#include "krein/moments.hpp"

namespace krein::io {

// Syntactically malformed input file.
class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// %.17g, with "inf" for infinity.
inline std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline double parse_double(const std::string& text) {
  if (text == "inf" || text == "+inf") return infinity;
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size() || errno == ERANGE)
    throw format_error("malformed number '" + text + "'");
  return v;
}

// ---- string CSV: header "x,y", one row per jump, terminal as "L,inf" ----

inline void write_string_csv(std::ostream& out, const DiscreteString& s) {
  out << "x,y\n";
  for (const auto& j : s.jumps()) out << format_double(j.position) << ',' << format_double(j.value) << '\n';
  if (s.terminal()) out << format_double(*s.terminal()) << ",inf\n";
}

inline DiscreteString read_string_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw format_error("empty string file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,y") throw format_error("string file must start with header 'x,y'");

  std::vector<Jump> jumps;
  std::optional<double> terminal;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (terminal) throw format_error("row " + std::to_string(row) + " follows the terminal row");
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw format_error("row " + std::to_string(row) + " must have exactly two fields");
    const double x = parse_double(line.substr(0, comma));
    const double y = parse_double(line.substr(comma + 1));
    if (std::isinf(y))
      terminal = x;
    else
      jumps.push_back({x, y});
  }
  return validate_string(std::move(jumps), terminal);
}

// ---- coefficient JSON: {"form": "krein"|"stieltjes", "s": [...]} ----

inline nlohmann::json number_to_json(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9007199254740992.0)
    return static_cast<std::int64_t>(v);
  return v;
}

inline nlohmann::json fraction_to_json(const ContinuedFraction& cf) {
  nlohmann::json s = nlohmann::json::array();
  for (double v : cf.coefficients()) s.push_back(number_to_json(v));
  return {{"form", to_string(cf.form())}, {"s", s}};
}

inline nlohmann::json expansion_to_json(const StieltjesExpansion& e) {
  nlohmann::json s = nlohmann::json::array();
  for (const auto& r : e.coefficients) s.push_back(format_rational(r));
  return {{"form", "stieltjes"}, {"s", s}, {"terminated", e.terminated}};
}

inline nlohmann::json parse_json(std::istream& in) {
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw format_error(std::string("malformed JSON: ") + e.what());
  }
}

inline Rational json_to_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw format_error(e.what());
    }
  }
  throw format_error("expected an integer or a \"p/q\" string");
}

inline ContinuedFraction fraction_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("form") || !j.contains("s"))
    throw format_error("coefficient file needs fields \"form\" and \"s\"");
  const auto& form_field = j.at("form");
  if (!form_field.is_string()) throw format_error("\"form\" must be a string");
  CfForm form;
  if (form_field == "krein")
    form = CfForm::krein;
  else if (form_field == "stieltjes")
    form = CfForm::stieltjes;
  else
    throw format_error("unknown form " + form_field.dump());
  if (!j.at("s").is_array()) throw format_error("\"s\" must be an array");

  std::vector<double> s;
  for (const auto& v : j.at("s")) {
    if (v.is_number())
      s.push_back(v.get<double>());
    else
      s.push_back(json_to_rational(v).convert_to<double>());
  }
  return ContinuedFraction(form, std::move(s));
}

inline ContinuedFraction read_fraction(std::istream& in) { return fraction_from_json(parse_json(in)); }

// ---- moments JSON: {"c": ["p/q", ...]} ----

inline MomentSequence read_moments(std::istream& in) {
  const auto j = parse_json(in);
  if (!j.is_object() || !j.contains("c") || !j.at("c").is_array())
    throw format_error("moment file needs an array field \"c\"");
  std::vector<Rational> c;
  for (const auto& v : j.at("c")) c.push_back(json_to_rational(v));
  return MomentSequence(std::move(c));
}

// ---- reports ----

inline nlohmann::json report_to_json(const ErrorReport& r, const std::string& reference) {
  return {{"metric", r.averaged ? "averaged" : "sup"},
          {"reference", reference},
          {"window", r.window},
          {"error", r.error},
          {"index", r.index},
          {"position", r.position},
          {"points", r.points}};
}

inline nlohmann::json study_to_json(const ConvergenceStudy& s, const std::string& family,
                                    const std::string& reference, double window, bool averaged) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : s.points) pts.push_back({{"n", p.n}, {"error", p.error}});
  return {{"family", family},   {"reference", reference}, {"window", window},
          {"metric", averaged ? "averaged" : "sup"},       {"points", pts},
          {"slope", s.slope}};
}

inline void write_study_csv(std::ostream& out, const ConvergenceStudy& s) {
  out << "n,error\n";
  for (const auto& p : s.points) out << p.n << ',' << format_double(p.error) << '\n';
}

inline void write_json(std::ostream& out, const nlohmann::json& j) { out << j.dump() << '\n'; }

}  // namespace krein::io
