#pragma once

#include <string>
#include <vector>

#include "cw/abelian.hpp"

namespace cw {

enum class FieldKind { QuadClosed, RealClosed, FiniteOdd };

struct FieldModel {
  FieldKind kind = FieldKind::QuadClosed;
  int q = 0;  // only for FiniteOdd; an odd prime

  static FieldModel parse(const std::string& name);  // "C", "R", "F3", ...
  std::string name() const;
  bool operator==(const FieldModel&) const = default;
};

// Commutative ring structure on a finitely generated abelian group:
// coordinates relative to a fixed generating set, with a multiplication
// table on those generators.
struct ScalarRing {
  AbGroup group;
  std::vector<std::string> basis;
  Vec one;
  std::vector<std::vector<Vec>> mul;  // mul[i][j] = basis_i * basis_j

  Vec multiply(const Vec& x, const Vec& y) const;
  Vec scale(const Int& c, const Vec& x) const;
};

// Outcome of classifying quadratic forms over F_q by brute-force closure
// under chain equivalence. Forms are diagonal with entries normalized to
// the square classes {1, a}, a a fixed nonsquare, so a form is a pair
// (count of 1s, count of a's).
struct WittClassification {
  int q = 0;
  int nonsquare = 0;       // the chosen representative a
  bool minus_one_square = false;
  AbGroup witt;            // on generators <1>, <a>
  Vec minus_one;           // class of <-1> in those coordinates
};
WittClassification classify_witt_finite(int q);

// All scalar-level data the graded machinery needs for one base field.
struct ScalarData {
  FieldModel field;
  ScalarRing gw;             // Grothendieck-Witt ring
  ScalarRing w;              // Witt ring
  Vec h_gw;                  // hyperbolic form in gw coordinates
  Vec h_w;                   // its Witt image (always zero)
  Mat rank_matrix;           // gw -> Z
  Mat gw_to_w_matrix;        // coordinate projection gw -> w
  Mat w_rank2_matrix;        // w -> Z/2, rank mod 2
  std::vector<Vec> ideal_gw; // generators of the rank-zero ideal of gw

  // Generators of I^j inside the Witt ring (I^0 = everything).
  std::vector<Vec> ideal_power_w(int j) const;
  // 1 if I^j / I^(j+1) has order 2, otherwise 0.
  int ibar_order2(int j) const;
};

ScalarData make_scalar_data(const FieldModel& f);

// Coefficient rings for the untwisted theories.
ScalarRing integer_ring();
ScalarRing mod2_ring();

}  // namespace cw
