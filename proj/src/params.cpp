#include "schwarzian/params.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "schwarzian/errors.hpp"

namespace schwarzian {

JanowskiParams::JanowskiParams(double a, double b) : a_(a), b_(b) {
  if (!(std::isfinite(a) && std::isfinite(b)) || !(b >= -1.0) || !(a <= 1.0) || !(b < a)) {
    std::ostringstream msg;
    msg << "Janowski parameters must satisfy -1 <= B < A <= 1, got A=" << a << ", B=" << b;
    throw DomainError(msg.str());
  }
  abs_sum_ = std::abs(a + b);
  root_ = std::sqrt(1.0 - b * b);
}

JanowskiParams validate(double a, double b) { return JanowskiParams(a, b); }

std::string_view to_string(Region r) {
  switch (r) {
    case Region::E1:
      return "E1";
    case Region::E2:
      return "E2";
    case Region::E3:
      return "E3";
  }
  return "?";
}

Region region_from_string(std::string_view s) {
  if (s == "E1") return Region::E1;
  if (s == "E2") return Region::E2;
  if (s == "E3") return Region::E3;
  throw DomainError("unknown region tag: " + std::string(s));
}

namespace {

double root_of(double abs_b) { return std::sqrt(1.0 - abs_b * abs_b); }

}  // namespace

bool in_e1(const JanowskiParams& p) {
  const double s = p.abs_sum();
  return 1.0 - p.root() < s && s < 1.0 + p.root();
}

bool in_e2(const JanowskiParams& p) {
  const double s = p.abs_sum();
  return s <= 1.0 - p.root() && s <= std::abs(p.B());
}

bool in_e3(const JanowskiParams& p) {
  const double s = p.abs_sum();
  return s >= 1.0 + p.root() && s > std::abs(p.B());
}

Region classify(double abs_sum, double abs_b) {
  const double r = root_of(abs_b);
  if (1.0 - r < abs_sum && abs_sum < 1.0 + r) return Region::E1;
  // Outside E1 the two closed sets are separated by |A+B| <= |B|.
  return abs_sum <= abs_b ? Region::E2 : Region::E3;
}

Region classify(const JanowskiParams& p) { return classify(p.abs_sum(), std::abs(p.B())); }

}  // namespace schwarzian
