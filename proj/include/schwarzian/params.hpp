#pragma once

#include <string_view>

namespace schwarzian {

/// A validated Janowski pair with -1 <= B < A <= 1.
class JanowskiParams {
 public:
  /// Throws DomainError unless -1 <= B < A <= 1.
  JanowskiParams(double a, double b);

  double A() const { return a_; }
  double B() const { return b_; }

  /// |A + B|, in [0, 2].
  double abs_sum() const { return abs_sum_; }
  /// sqrt(1 - B^2), in [0, 1].
  double root() const { return root_; }

  friend bool operator==(const JanowskiParams&, const JanowskiParams&) = default;

 private:
  double a_;
  double b_;
  double abs_sum_;
  double root_;
};

JanowskiParams validate(double a, double b);

enum class Region { E1, E2, E3 };

std::string_view to_string(Region r);
Region region_from_string(std::string_view s);

// Membership predicates, written exactly as the set definitions (E1 open,
// E2/E3 closed on the 1 -/+ sqrt(1 - B^2) boundaries).
bool in_e1(const JanowskiParams& p);
bool in_e2(const JanowskiParams& p);
bool in_e3(const JanowskiParams& p);

/// Classifies from the two invariants |A + B| and |B| only.
Region classify(double abs_sum, double abs_b);
Region classify(const JanowskiParams& p);

}  // namespace schwarzian
