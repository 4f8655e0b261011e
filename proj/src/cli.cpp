#include "schwarzian/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "schwarzian/bounds.hpp"
#include "schwarzian/errors.hpp"
#include "schwarzian/extremal.hpp"
#include "schwarzian/io.hpp"
#include "schwarzian/schwarzian.hpp"
#include "schwarzian/verifier.hpp"

namespace schwarzian::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kBadArgs = 2;

struct Pair {
  double a = 0.0;
  double b = 0.0;
};

void add_pair(CLI::App* cmd, Pair& p) {
  cmd->add_option("--A", p.a, "Janowski parameter A")->required();
  cmd->add_option("--B", p.b, "Janowski parameter B")->required();
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string re_text = text.substr(0, comma);
    const std::string im_text = text.substr(comma + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw DomainError("expected a complex number 're' or 're,im', got '" + text + "'");
  }
}

GridSpec parse_grid(const std::string& text) {
  GridSpec grid;
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("--grid expects R,T");
  try {
    grid.radial_points = std::stoi(text.substr(0, comma));
    grid.angular_points = std::stoi(text.substr(comma + 1));
  } catch (const std::logic_error&) {
    throw DomainError("--grid expects two integers R,T");
  }
  grid.check();
  return grid;
}

// z0 in {+-0.1, ..., +-0.9} that admit the f_{z0,p,q} construction.
std::vector<double> admissible_z0(const JanowskiParams& params) {
  std::vector<double> out;
  for (int k = 1; k <= 9; ++k) {
    for (const double sign : {1.0, -1.0}) {
      const double z0 = sign * k / 10.0;
      if (is_admissible(params, z0)) out.push_back(z0);
    }
  }
  return out;
}

Json coefficient_array(const PowerSeries& s, std::size_t count) {
  Json arr = Json::array();
  for (std::size_t n = 0; n < count && n <= s.order(); ++n) {
    arr.push_back(Json::array({s[n].real(), s[n].imag()}));
  }
  return arr;
}

void print(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schwarzian derivative and Schwarzian norm bounds for Janowski convex functions",
               "schwarzian"};
  app.require_subcommand(1);

  Pair pair;

  auto* classify_cmd = app.add_subcommand("classify", "Region E1/E2/E3 of (A, B)");
  add_pair(classify_cmd, pair);

  double re = 0.0;
  double im = 0.0;
  std::vector<std::string> psi_zeros;
  double theta = 0.0;
  bool zero_psi = false;
  auto* bound_cmd = app.add_subcommand("bound", "S_f(z) for w = z psi, and the pointwise bound");
  add_pair(bound_cmd, pair);
  bound_cmd->add_option("--re", re, "Re z")->required();
  bound_cmd->add_option("--im", im, "Im z")->required();
  bound_cmd->add_option("--psi-zeros", psi_zeros, "Blaschke zeros of psi as re or re,im");
  bound_cmd->add_option("--theta", theta, "rotation of psi")->capture_default_str();
  bound_cmd->add_flag("--zero-psi", zero_psi, "use psi == 0");

  auto* norm_cmd = app.add_subcommand("norm", "Sharp Schwarzian norm bound");
  add_pair(norm_cmd, pair);

  double z0 = 0.0;
  std::size_t order = kDefaultSeriesOrder;
  auto* extremal_cmd = app.add_subcommand("extremal", "f_{z0,p,q} extremal at z0");
  add_pair(extremal_cmd, pair);
  extremal_cmd->add_option("--z0", z0, "real point in (-1, 1)")->required();
  extremal_cmd->add_option("--order", order, "series order")->capture_default_str();

  std::string which;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Taylor coefficients of K or f0 as CSV");
  add_pair(coeffs_cmd, pair);
  coeffs_cmd->add_option("--which", which, "K or f0")->required()->check(CLI::IsMember({"K", "f0"}));
  coeffs_cmd->add_option("--order", order, "series order")->capture_default_str();

  int trials = 1000;
  std::uint64_t seed = 0;
  std::string grid_text = "256,128";
  auto* verify_cmd = app.add_subcommand("verify", "Dominance, sharpness and numeric norm checks");
  add_pair(verify_cmd, pair);
  verify_cmd->add_option("--trials", trials, "random (w, z) trials")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--grid", grid_text, "radial,angular grid points")->capture_default_str();

  int scan_n = 50;
  std::string out_path;
  bool scan_numeric = false;
  auto* scan_cmd = app.add_subcommand("scan", "N x N parameter scan as CSV");
  scan_cmd->add_option("--grid", scan_n, "points per axis")->capture_default_str();
  scan_cmd->add_option("--out", out_path, "output CSV file")->required();
  scan_cmd->add_flag("--numeric", scan_numeric, "also compute the grid norm of the branch witness");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  }

  try {
    if (*classify_cmd) {
      const JanowskiParams p(pair.a, pair.b);
      print(out, Json{{"A", p.A()}, {"B", p.B()}, {"region", std::string(to_string(classify(p)))}});
      return kOk;
    }
    if (*bound_cmd) {
      const JanowskiParams p(pair.a, pair.b);
      const Complex z{re, im};
      SchwarzFunction w = SchwarzFunction::zero();
      if (!zero_psi) {
        std::vector<Complex> zeros;
        for (const auto& text : psi_zeros) zeros.push_back(parse_complex(text));
        w = SchwarzFunction(BlaschkeProduct(theta, std::move(zeros)));
      }
      Json j{{"A", p.A()}, {"B", p.B()}};
      j.update(to_json(schwarzian(p, w, z)));
      const PointwiseBoundParts parts = pointwise_bound_parts(p, z);
      const double u = 1.0 - std::norm(z);
      j["pointwise_bound"] = parts.value;
      j["weighted_bound"] = u * u * parts.value;
      j["branch"] = std::string(to_string(parts.branch));
      j["s0"] = parts.s0;
      print(out, j);
      return kOk;
    }
    if (*norm_cmd) {
      print(out, to_json(norm_bound(JanowskiParams(pair.a, pair.b))));
      return kOk;
    }
    if (*extremal_cmd) {
      const JanowskiParams p(pair.a, pair.b);
      if (order < 2) throw DomainError("--order must be at least 2");
      const ExtremalSpec spec = make_fzpq(p, z0);
      const double u = 1.0 - z0 * z0;
      Json j{{"A", p.A()}, {"B", p.B()}, {"z0", z0}, {"p", spec.p}, {"q", spec.q}, {"b", spec.b}};
      j["weighted_value"] = extremal_weighted_value(p, z0);
      j["weighted_bound"] = u * u * pointwise_bound(p, z0);
      j["order"] = order;
      j["coefficients"] = coefficient_array(fzpq_series(p, spec, order), order);
      print(out, j);
      return kOk;
    }
    if (*coeffs_cmd) {
      const JanowskiParams p(pair.a, pair.b);
      if (order < 2) throw DomainError("--order must be at least 2");
      write_coefficients_csv(out, which == "K" ? K_series(p, order) : f0_series(p, order));
      return kOk;
    }
    if (*verify_cmd) {
      const JanowskiParams p(pair.a, pair.b);
      const GridSpec grid = parse_grid(grid_text);
      if (trials < 1) throw DomainError("--trials must be at least 1");
      const auto z0s = admissible_z0(p);
      const VerificationReport dominance = check_pointwise_dominance(p, trials, seed);
      const VerificationReport sharpness = check_sharpness(p, z0s, grid);
      const ExtremalSpec witness = norm_witness(p, grid);
      const VerificationReport norm = numeric_norm(p, schwarz_function_of(witness), grid);
      Json j{{"A", p.A()}, {"B", p.B()}};
      j["norm_bound"] = to_json(norm_bound(p));
      j["dominance"] = to_json(dominance);
      j["sharpness"] = to_json(sharpness);
      j["sharpness"]["z0"] = z0s;
      j["witness_norm"] = to_json(norm);
      j["witness_norm"]["witness"] = std::string(to_string(witness.kind));
      const bool ok = dominance.passed() && sharpness.passed() && norm.passed();
      j["passed"] = ok;
      print(out, j);
      return ok ? kOk : kFalsified;
    }
    if (*scan_cmd) {
      const auto rows = scan(scan_n, scan_numeric);
      std::ofstream file(out_path);
      if (!file) throw DomainError("cannot open " + out_path);
      file.imbue(std::locale::classic());
      write_csv(file, rows);
      std::size_t e1 = 0, e2 = 0, e3 = 0;
      for (const auto& r : rows) {
        (r.region == Region::E1 ? e1 : r.region == Region::E2 ? e2 : e3) += 1;
      }
      print(out, Json{{"rows", rows.size()}, {"E1", e1}, {"E2", e2}, {"E3", e3}, {"out", out_path}});
      return kOk;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  }
  return kBadArgs;
}

}  // namespace schwarzian::cli
