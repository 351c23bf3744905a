#pragma once

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krein/krein.hpp"

namespace krein::cli {

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return in;
}

// Writes to the named file, or to `fallback` when the path is empty.
template <class Writer>
void emit(const std::string& path, std::ostream& fallback, Writer write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  write(out);
}

struct FamilyParams {
  std::string name;
  double alpha = 0.5;
  double beta = 2.0;
  double c_const = 1.0 / std::sqrt(2.0 * std::numbers::pi);
};

inline CoefficientFamily make_family(const FamilyParams& p) {
  if (p.name == "tanh") return [](std::size_t n) { return tanh_coefficients(n); };
  if (p.name == "bessel-drift")
    return [p](std::size_t n) { return bessel_drift_coefficients(p.alpha, p.beta, p.c_const, n); };
  if (p.name == "log-limit")
    return [p](std::size_t n) { return log_limit_coefficients(p.beta, n); };
  throw std::invalid_argument("unknown coefficient family '" + p.name + "'");
}

inline std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw std::invalid_argument("malformed --n-list entry '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace detail

/// Runs the command line; returns 0 on success, 1 on a violated
/// precondition, 2 on a malformed input file.
inline int run(const std::vector<std::string>& argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Krein string inversion from continued-fraction coefficients", "krein"};
  app.require_subcommand(1);

  // coeffs
  detail::FamilyParams family;
  std::size_t count = 0;
  std::string in_path, out_path;
  auto* coeffs = app.add_subcommand("coeffs", "Generate continued-fraction coefficients");
  coeffs->add_option("family", family.name, "tanh | bessel-drift | log-limit | from-moments")
      ->required()
      ->check(CLI::IsMember({"tanh", "bessel-drift", "log-limit", "from-moments"}));
  coeffs->add_option("-n", count, "Index of the last coefficient");
  coeffs->add_option("--alpha", family.alpha, "Bessel-drift exponent in (0,1)");
  coeffs->add_option("--beta", family.beta, "Drift parameter beta > 0");
  coeffs->add_option("--c-const", family.c_const, "Levy measure constant C > 0");
  coeffs->add_option("--in", in_path, "Moments JSON (from-moments)");
  coeffs->add_option("--out", out_path, "Output coefficient JSON");

  // invert
  auto* inv = app.add_subcommand("invert", "Reconstruct the discrete string");
  inv->add_option("--in", in_path, "Coefficient JSON")->required();
  inv->add_option("--out", out_path, "Output string CSV");

  // eval
  std::string coeffs_path, string_path;
  double z = 0.0, lambda = 0.0;
  bool levy = false;
  auto* ev = app.add_subcommand("eval", "Evaluate a characteristic function or Levy exponent");
  auto* opt_c = ev->add_option("--coeffs", coeffs_path, "Coefficient JSON");
  auto* opt_s = ev->add_option("--string", string_path, "String CSV");
  opt_c->excludes(opt_s);
  auto* opt_z = ev->add_option("--z", z, "Negative spectral parameter");
  auto* opt_levy = ev->add_flag("--levy", levy, "Print Theta(lambda) = 1/W(-lambda)");
  auto* opt_lambda = ev->add_option("--lambda", lambda, "Positive lambda for --levy");
  opt_lambda->needs(opt_levy);

  // dual / hat
  auto* du = app.add_subcommand("dual", "Dual (right-continuous inverse) of a string");
  du->add_option("--in", in_path, "String CSV")->required();
  du->add_option("--out", out_path, "Output string CSV");
  auto* hat = app.add_subcommand("hat", "Remove the atom at 0 from the spectral function");
  hat->add_option("--in", in_path, "String CSV")->required();
  hat->add_option("--out", out_path, "Output string CSV");

  // compare
  std::string approx_path, reference_name;
  double window = 5.0;
  bool averaged = false;
  auto* cmp = app.add_subcommand("compare", "Error of a string against a closed-form reference");
  cmp->add_option("--approx", approx_path, "String CSV")->required();
  cmp->add_option("--reference", reference_name, "bm-drift | uniform")->required();
  cmp->add_option("--window", window, "Compare jumps with x < window");
  cmp->add_flag("--averaged", averaged, "Average the step values at each jump");
  cmp->add_option("--out", out_path, "Output report JSON");

  // study
  std::string n_list_text = "63,127,255,511";
  std::string csv_path;
  auto* st = app.add_subcommand("study", "Convergence study over truncation sizes");
  st->add_option("--family", family.name, "bessel-drift | tanh | log-limit")
      ->required()
      ->check(CLI::IsMember({"bessel-drift", "tanh", "log-limit"}));
  st->add_option("--n-list", n_list_text, "Comma-separated sizes");
  st->add_flag("--averaged", averaged, "Use the jump-averaged metric");
  st->add_option("--reference", reference_name, "bm-drift | uniform")->required();
  st->add_option("--window", window, "Compare jumps with x < window");
  st->add_option("--alpha", family.alpha, "Bessel-drift exponent in (0,1)");
  st->add_option("--beta", family.beta, "Drift parameter beta > 0");
  st->add_option("--c-const", family.c_const, "Levy measure constant C > 0");
  st->add_option("--out", out_path, "Output study JSON");
  st->add_option("--csv", csv_path, "Also write the (n, error) pairs as CSV");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();  // program name
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*coeffs) {
      if (family.name == "from-moments") {
        if (in_path.empty()) throw std::invalid_argument("from-moments needs --in <moments.json>");
        auto in = detail::open_input(in_path);
        const auto expansion = coefficients_from_moments(io::read_moments(in));
        detail::emit(out_path, out, [&](std::ostream& o) { io::write_json(o, io::expansion_to_json(expansion)); });
        return 0;
      }
      const ContinuedFraction cf = detail::make_family(family)(count);
      detail::emit(out_path, out, [&](std::ostream& o) { io::write_json(o, io::fraction_to_json(cf)); });
    } else if (*inv) {
      auto in = detail::open_input(in_path);
      // A Stieltjes fraction is the minus map of the Krein fraction with the
      // same coefficients, so both name the same string.
      const ContinuedFraction cf = io::read_fraction(in);
      const DiscreteString s = invert(cf.form() == CfForm::krein ? cf : flip_form(cf));
      detail::emit(out_path, out, [&](std::ostream& o) { io::write_string_csv(o, s); });
    } else if (*ev) {
      if (coeffs_path.empty() == string_path.empty())
        throw std::invalid_argument("eval needs exactly one of --coeffs or --string");
      if (levy) {
        if (opt_lambda->count() == 0) throw std::invalid_argument("--levy needs --lambda");
        if (coeffs_path.empty()) throw std::invalid_argument("--levy needs --coeffs");
        auto in = detail::open_input(coeffs_path);
        out << io::format_double(levy_exponent(io::read_fraction(in), lambda)) << '\n';
        return 0;
      }
      if (opt_z->count() == 0) throw std::invalid_argument("eval needs --z");
      double w = 0.0;
      if (!coeffs_path.empty()) {
        auto in = detail::open_input(coeffs_path);
        w = eval_cf(io::read_fraction(in), z);
      } else {
        auto in = detail::open_input(string_path);
        w = eval_w_string(io::read_string_csv(in), z);
      }
      out << io::format_double(w) << '\n';
    } else if (*du || *hat) {
      auto in = detail::open_input(in_path);
      const DiscreteString s = io::read_string_csv(in);
      const DiscreteString t = *du ? dual(s) : remove_zero_atom(s);
      detail::emit(out_path, out, [&](std::ostream& o) { io::write_string_csv(o, t); });
    } else if (*cmp) {
      const Reference ref = reference_from_name(reference_name);
      auto in = detail::open_input(approx_path);
      const DiscreteString s = io::read_string_csv(in);
      const auto fn = reference_function(ref);
      const ErrorReport r = averaged ? averaged_error(s, fn, window) : sup_error(s, fn, window);
      detail::emit(out_path, out, [&](std::ostream& o) { io::write_json(o, io::report_to_json(r, to_string(ref))); });
    } else if (*st) {
      const Reference ref = reference_from_name(reference_name);
      const auto sizes = detail::parse_n_list(n_list_text);
      const ConvergenceStudy study =
          convergence_study(detail::make_family(family), sizes, reference_function(ref), window, averaged);
      detail::emit(out_path, out, [&](std::ostream& o) {
        io::write_json(o, io::study_to_json(study, family.name, to_string(ref), window, averaged));
      });
      if (!csv_path.empty())
        detail::emit(csv_path, out, [&](std::ostream& o) { io::write_study_csv(o, study); });
    }
  } catch (const io::format_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace krein::cli
