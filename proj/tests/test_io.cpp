#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "schwarzian/errors.hpp"
#include "schwarzian/io.hpp"

using namespace schwarzian;

TEST_CASE("NormBoundReport JSON") {
  const Json j = to_json(norm_bound(validate(1.0, -1.0)));
  CHECK(j.dump() == R"({"A":1.0,"B":-1.0,"region":"E2","branch":"Bm1","bound":2.0,"alpha":null,"qc_constant":null})");
  const Json k = to_json(norm_bound(validate(-0.5, -1.0)));
  CHECK(k["region"] == "E3");
  CHECK(k["qc_constant"].get<double>() == 0.75);
}

TEST_CASE("sample JSON") {
  const Json j = to_json(schwarzian::schwarzian(validate(1.0, -1.0), SchwarzFunction(BlaschkeProduct(0.0, {0.0})), 0.0));
  CHECK(j["z"] == Json::array({0.0, 0.0}));
  CHECK(j["S"][0].get<double>() == 2.0);
  CHECK(j["weighted"].get<double>() == 2.0);
}

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = unit(rng) * std::pow(10.0, i % 30 - 15);
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("scan rows are admissible, sorted and partitioned") {
  const auto rows = scan(50);
  CHECK(rows.size() == 2500);
  std::size_t counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ScanRow& r = rows[i];
    CHECK(r.B < r.A);
    CHECK(r.B >= -1.0);
    CHECK(r.A <= 1.0);
    CHECK(r.region == classify(validate(r.A, r.B)));
    ++counts[static_cast<int>(r.region)];
    if (i > 0) {
      const ScanRow& q = rows[i - 1];
      CHECK((q.A < r.A || (q.A == r.A && q.B < r.B)));
    }
  }
  CHECK(counts[0] + counts[1] + counts[2] == rows.size());
  CHECK(counts[0] > 0);
  CHECK(counts[1] > 0);
  CHECK(counts[2] > 0);
}

TEST_CASE("CSV rows parse back losslessly") {
  auto rows = scan(12);
  for (std::size_t i = 0; i < rows.size(); i += 7) rows[i].numeric_sup = 1.0 / (3.0 + i);
  std::stringstream ss;
  write_csv(ss, rows);
  const auto back = read_csv(ss);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].A == rows[i].A);
    CHECK(back[i].B == rows[i].B);
    CHECK(back[i].region == rows[i].region);
    CHECK(back[i].branch == rows[i].branch);
    CHECK(back[i].bound == rows[i].bound);
    CHECK(back[i].alpha == rows[i].alpha);
    CHECK(back[i].qc_constant == rows[i].qc_constant);
    CHECK(back[i].numeric_sup == rows[i].numeric_sup);
  }
  std::stringstream bad("A,B\n1,2\n");
  CHECK_THROWS_AS(read_csv(bad), DomainError);
}

TEST_CASE("scan with numeric sups stays below the bound") {
  GridSpec coarse;
  coarse.radial_points = 64;
  coarse.angular_points = 32;
  for (const auto& r : scan(6, true, coarse)) {
    REQUIRE(r.numeric_sup.has_value());
    CHECK(*r.numeric_sup <= r.bound + 1e-9);
  }
}
