#include "schwarzian/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "schwarzian/errors.hpp"
#include "schwarzian/parallel.hpp"

namespace schwarzian {

namespace {

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

std::string optional_field(const std::optional<double>& x) { return x ? format_double(*x) : ""; }

double parse_double(const std::string& s) {
  double x = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, x);
  if (ec != std::errc{} || ptr != end) throw DomainError("malformed number in CSV: '" + s + "'");
  return x;
}

std::optional<double> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_double(s);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

Json to_json(const NormBoundReport& r) {
  Json j;
  j["A"] = r.params.A();
  j["B"] = r.params.B();
  j["region"] = std::string(to_string(r.region));
  j["branch"] = std::string(to_string(r.branch));
  j["bound"] = r.bound;
  j["alpha"] = optional_number(r.alpha);
  j["qc_constant"] = optional_number(r.qc_constant);
  return j;
}

Json to_json(const SchwarzianSample& s) {
  Json j;
  j["z"] = complex_pair(s.z);
  j["S"] = complex_pair(s.value);
  j["weighted"] = s.weighted;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["numeric_sup"] = r.numeric_sup;
  j["closed_form"] = r.closed_form;
  j["max_violation"] = r.max_violation;
  j["checks"] = r.checks;
  j["violations"] = r.violations;
  j["tolerance"] = r.tolerance;
  j["max_equality_gap"] = optional_number(r.max_equality_gap);
  j["passed"] = r.passed();
  Json w = Json::array();
  for (const Witness& x : r.witnesses) w.push_back({{"z", complex_pair(x.z)}, {"weighted", x.weighted}});
  j["witnesses"] = std::move(w);
  return j;
}

std::vector<ScanRow> scan(int n, bool numeric, const GridSpec& grid) {
  if (n < 1) throw DomainError("scan grid must be at least 1");
  const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<ScanRow> rows(count);
  parallel_for(count, [&](std::size_t k) {
    const int j = static_cast<int>(k / static_cast<std::size_t>(n));
    const int i = static_cast<int>(k % static_cast<std::size_t>(n));
    const double b = -1.0 + 2.0 * j / n;
    const double a = i + 1 == n ? 1.0 : b + (1.0 - b) * (i + 1) / n;
    const JanowskiParams params(a, b);
    const NormBoundReport nb = norm_bound(params);
    ScanRow row{a, b, nb.region, nb.branch, nb.bound, nb.alpha, nb.qc_constant, std::nullopt};
    if (numeric) {
      row.numeric_sup =
          numeric_norm(params, schwarz_function_of(norm_witness(params, grid)), grid).numeric_sup;
    }
    rows[k] = row;
  });
  std::sort(rows.begin(), rows.end(), [](const ScanRow& x, const ScanRow& y) {
    return x.A != y.A ? x.A < y.A : x.B < y.B;
  });
  return rows;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) throw DomainError("cannot format number");
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << kScanHeader << '\n';
  for (const ScanRow& r : rows) {
    out << format_double(r.A) << ',' << format_double(r.B) << ',' << to_string(r.region) << ','
        << to_string(r.branch) << ',' << format_double(r.bound) << ',' << optional_field(r.alpha)
        << ',' << optional_field(r.qc_constant) << ',' << optional_field(r.numeric_sup) << '\n';
  }
}

std::vector<ScanRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kScanHeader) throw DomainError("unexpected CSV header");
  std::vector<ScanRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 8) throw DomainError("CSV row must have 8 fields: " + line);
    rows.push_back({parse_double(f[0]), parse_double(f[1]), region_from_string(f[2]),
                    norm_branch_from_string(f[3]), parse_double(f[4]), parse_optional(f[5]),
                    parse_optional(f[6]), parse_optional(f[7])});
  }
  return rows;
}

void write_coefficients_csv(std::ostream& out, const PowerSeries& s) {
  out << "n,re,im\n";
  for (std::size_t n = 0; n <= s.order(); ++n) {
    out << n << ',' << format_double(s[n].real()) << ',' << format_double(s[n].imag()) << '\n';
  }
}

}  // namespace schwarzian
