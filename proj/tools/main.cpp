#include "radiq/cubic.hpp"
#include "radiq/denest.hpp"
#include "radiq/parser.hpp"
#include "radiq/sextic.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

using namespace radiq;

struct UsageError {
  std::string message;
};

const char* const kUsage = R"(usage:
  radiq denest "<expr>" [--json]
      Decide whether cbrt(a + b*sqrt(p)) denests to A + B*sqrt(p) and
      print the exact result. Expression grammar: rationals (e.g. -22/7),
      +, -, *, parentheses, sqrt(...), cbrt(...). The top level must be a
      single cbrt whose body is rational +/- rational*sqrt(rational).

  radiq factor-sextic --c <rational> --d <rational> [--json]
      Prime factorization of x^6 + c*x^3 + d over Q (d != 0; for d = 0
      factor out x^3 first and handle x^3 + c directly).

  radiq solve-cubic <a3> <a2> <a1> <a0> [--precision <bits>] [--json]
      Roots of a3*x^3 + a2*x^2 + a1*x + a0: rational roots exactly, the
      rest as verified high-precision numerics (default 128 bits).

exit codes: 0 computed (including "not denestable"), 2 parse/usage error,
3 precondition violation.
)";

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError{"invalid rational for " + what + ": '" + text + "'"};
  }
}

int decimal_digits(long precision_bits) {
  return std::max(8, static_cast<int>(precision_bits * 0.30102999566398120));
}

ordered_json poly_json(const RationalPolynomial& h) {
  ordered_json coeffs = ordered_json::array();
  for (const Rational& c : h.coefficients()) coeffs.push_back(c.to_string());
  return coeffs;
}

ordered_json verdict_json(const DenestVerdict& verdict) {
  ordered_json out;
  if (const auto* d = std::get_if<Denested>(&verdict)) {
    out["denestable"] = true;
    out["A"] = d->A.to_string();
    out["B"] = d->B.to_string();
    out["p"] = to_string(d->p);
    out["N"] = d->N.to_string();
    out["r"] = d->r.to_string();
    out["min_poly"] = poly_json(d->min_poly);
  } else if (const auto* n = std::get_if<NotACube>(&verdict)) {
    out["denestable"] = false;
    out["N"] = n->N.to_string();
    out["reason"] = "N = " + n->N.to_string() + " is not a rational cube";
  } else {
    const auto& ri = std::get<ResolventIrreducible>(verdict);
    out["denestable"] = false;
    out["N"] = ri.N.to_string();
    out["reason"] = "resolvent " + to_string(ri.resolvent) + " has no rational root";
  }
  return out;
}

int run_denest(const std::vector<std::string>& args, bool json_mode) {
  if (args.size() != 1) throw UsageError{"denest takes exactly one expression argument"};
  const ExprPtr expr = parse_expression(args[0]);
  const CbrtBody body = analyze_cbrt(*expr);

  if (!body.has_sqrt) {
    // Pure rational radicand: answered by the exact cube-root test.
    std::cerr << "note: radicand is rational; answered by the exact cube-root test\n";
    const auto root = rational_cube_root(body.a);
    if (json_mode) {
      ordered_json out;
      out["denestable"] = root.has_value();
      if (root) out["result"] = root->to_string();
      out["reason"] = "rational radicand";
      std::cout << out.dump(2) << "\n";
    } else if (root) {
      std::cout << root->to_string() << "\n";
    } else {
      std::cout << "not denestable: " << body.a.to_string() << " is not a rational cube\n";
    }
    return 0;
  }

  const DenestVerdict verdict = denest(body.a, body.b, body.radicand);
  if (json_mode) {
    std::cout << verdict_json(verdict).dump(2) << "\n";
  } else {
    std::cout << to_string(verdict) << "\n";
  }
  return 0;
}

int run_factor_sextic(const std::vector<std::string>& args, bool json_mode) {
  std::optional<Rational> c, d;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--c" || args[i] == "--d") {
      if (i + 1 >= args.size()) throw UsageError{"missing value after " + args[i]};
      auto& slot = args[i] == "--c" ? c : d;
      slot = parse_rational_arg(args[i + 1], args[i]);
      ++i;
    } else {
      throw UsageError{"unexpected argument '" + args[i] + "'"};
    }
  }
  if (!c || !d) throw UsageError{"factor-sextic requires --c and --d"};

  const SexticFactorization f = classify_sextic(*c, *d);
  if (json_mode) {
    ordered_json out;
    out["row"] = f.row;
    ordered_json factors = ordered_json::array();
    for (const RationalPolynomial& factor : f.factors) factors.push_back(poly_json(factor));
    out["factors"] = factors;
    ordered_json evidence;
    evidence["delta"] = f.evidence.delta.to_string();
    evidence["sqrt_delta"] =
        f.evidence.sqrt_delta ? ordered_json(f.evidence.sqrt_delta->to_string()) : ordered_json();
    evidence["cbrt_d"] =
        f.evidence.cbrt_d ? ordered_json(f.evidence.cbrt_d->to_string()) : ordered_json();
    ordered_json roots = ordered_json::array();
    for (const Rational& r : f.evidence.resolvent_roots) roots.push_back(r.to_string());
    evidence["resolvent_roots"] = roots;
    out["evidence"] = evidence;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(f) << "\n";
  }
  return 0;
}

int run_solve_cubic(const std::vector<std::string>& args, bool json_mode) {
  std::vector<Rational> coeffs;
  long precision_bits = 128;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--precision") {
      if (i + 1 >= args.size()) throw UsageError{"missing value after --precision"};
      try {
        precision_bits = std::stol(args[i + 1]);
      } catch (const std::exception&) {
        throw UsageError{"invalid --precision value '" + args[i + 1] + "'"};
      }
      ++i;
    } else {
      coeffs.push_back(parse_rational_arg(args[i], "coefficient"));
    }
  }
  if (coeffs.size() != 4) throw UsageError{"solve-cubic takes exactly four coefficients"};

  const CubicRoots roots = solve_cubic(coeffs[0], coeffs[1], coeffs[2], coeffs[3], precision_bits);
  const int digits = decimal_digits(roots.precision_bits);
  if (json_mode) {
    ordered_json out;
    ordered_json exact = ordered_json::array();
    for (const Rational& r : roots.exact_roots) exact.push_back(r.to_string());
    out["exact"] = exact;
    ordered_json numeric = ordered_json::array();
    for (const CubicRoots::Numeric& z : roots.numeric_roots) {
      ordered_json item;
      item["re"] = z.re.to_decimal(digits);
      item["im"] = z.im.to_decimal(digits);
      numeric.push_back(item);
    }
    out["numeric"] = numeric;
    out["residual_bound"] = roots.residual_bound.to_decimal(8);
    out["precision_bits"] = roots.precision_bits;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Rational& r : roots.exact_roots) std::cout << "exact: " << r.to_string() << "\n";
    for (const CubicRoots::Numeric& z : roots.numeric_roots) {
      std::cout << "numeric: " << z.re.to_decimal(digits);
      if (!z.im.is_zero()) {
        const bool negative = z.im.sign() < 0;
        std::cout << (negative ? " - " : " + ") << abs(z.im).to_decimal(digits) << "i";
      }
      std::cout << "\n";
    }
    std::cout << "residual_bound: " << roots.residual_bound.to_decimal(8) << "\n";
  }
  return 0;
}

int dispatch(std::vector<std::string> args) {
  bool json_mode = false;
  const auto json_flag = std::find(args.begin(), args.end(), "--json");
  if (json_flag != args.end()) {
    json_mode = true;
    args.erase(json_flag);
  }
  if (args.empty()) throw UsageError{"missing subcommand"};
  if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    std::cout << kUsage;
    return 0;
  }
  const std::string command = args[0];
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  if (command == "denest") return run_denest(rest, json_mode);
  if (command == "factor-sextic") return run_factor_sextic(rest, json_mode);
  if (command == "solve-cubic") return run_solve_cubic(rest, json_mode);
  throw UsageError{"unknown subcommand '" + command + "'"};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return dispatch(std::move(args));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n\n" << kUsage;
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.message() << " at offset " << e.offset() << "\n";
    return 2;
  } catch (const UnsupportedShape& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
