#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schwarzian/bounds.hpp"
#include "schwarzian/extremal.hpp"
#include "schwarzian/schwarzian.hpp"
#include "schwarzian/verifier.hpp"

namespace schwarzian {

using Json = nlohmann::ordered_json;

Json to_json(const NormBoundReport& r);
Json to_json(const SchwarzianSample& s);
Json to_json(const VerificationReport& r);

/// One line of the parameter scan.
struct ScanRow {
  double A = 0.0;
  double B = 0.0;
  Region region = Region::E1;
  NormBranch branch = NormBranch::Bm1;
  double bound = 0.0;
  std::optional<double> alpha;
  std::optional<double> qc_constant;
  std::optional<double> numeric_sup;
};

inline constexpr const char* kScanHeader = "A,B,region,branch,bound,alpha,qc_constant,numeric_sup";

/// N x N admissible pairs: B_j = -1 + 2j/N for j < N, and for each B_j the
/// values A_i = B_j + (1 - B_j)(i + 1)/N for i < N. Rows are sorted by (A, B).
/// With `numeric` set, numeric_sup holds the grid norm of the branch witness.
std::vector<ScanRow> scan(int n, bool numeric = false, const GridSpec& grid = {});

/// Shortest text that parses back to the same double (at most 17 significant digits).
std::string format_double(double x);

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows);
/// Throws DomainError on a malformed header or row.
std::vector<ScanRow> read_csv(std::istream& in);

/// CSV "n,re,im" of the series coefficients.
void write_coefficients_csv(std::ostream& out, const PowerSeries& s);

}  // namespace schwarzian
