#pragma once

#include "cw/theory.hpp"

namespace cw {

// Parse errors carry a coarse classification the command line reports.
struct ParseError : std::runtime_error {
  std::string kind;  // "SyntaxError", "ArityError", "ParamError"
  ParseError(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

struct SpaceAtom {
  enum class Kind { Proj, Gm, Mu };
  Kind kind = Kind::Gm;
  int param = 0;  // dimension for Proj, order for Mu

  bool operator==(const SpaceAtom&) const = default;
  std::string str() const;
  // Twist coordinates this factor contributes (rank of Pic/2).
  std::size_t twist_slots() const;
};

// A space from the catalog: one atom or a product of two.
struct SpaceExpr {
  std::vector<SpaceAtom> factors;

  static SpaceExpr parse(const std::string& text);
  std::string str() const;
  std::size_t twist_dim() const;
  bool has_mu() const;
  bool operator==(const SpaceExpr&) const = default;
};

// Closed-form presentations for each catalog space. The quadratic
// refinement and the I-cohomology use twisted gradings; the Chow rings are
// untwisted but carry the same twist dimension so the structure maps line
// up bidegree by bidegree.
RingPresentation chow_presentation(const SpaceExpr& e, int bound);
RingPresentation chow_mod2_presentation(const SpaceExpr& e, int bound);
RingPresentation icoh_presentation(const SpaceExpr& e, const ScalarData& k,
                                   int bound);
RingPresentation chow_witt_presentation(const SpaceExpr& e,
                                        const ScalarData& k, int bound);

// Everything about one space over one base field: the four theories, the
// structure maps between them, and hyperbolic data for the exact-sequence
// checks. Degrees are reliable up to `bound`; the presentations truncate
// two degrees higher so boundary maps at the top edge stay honest.
struct SpaceTheories {
  SpaceExpr expr;
  FieldModel field;
  int bound = 0;
  TheoryStack stack;

  // Degree-0 hyperbolic class of each nonzero twist (bitmask over slots).
  std::map<std::vector<int>, Poly> twist_hyperbolic;
  // How each space was obtained, one line per derivation step.
  std::vector<std::string> log;
};

SpaceTheories build_space(const SpaceExpr& e, const FieldModel& f, int bound);
SpaceTheories build_space(const std::string& expr, const std::string& field,
                          int bound);

// One localization step: the candidate ring of a space with a finite
// factor is checked against the quotient of its parent (the same space
// with that factor's group extended to the full torus) by the Euler class
// of the corresponding line bundle.
struct QuotientStep {
  SpaceExpr parent;
  std::size_t slot = 0;  // factor being cut down
  int n = 0;             // order of the finite group
  Poly euler;            // Euler class of O(n) on that slot, in parent ring
  Twist euler_twist;     // its twist, in parent coordinates
  GenMap sigma;          // parent generators -> candidate ring
  // Parent twist coordinate that disappears (odd n only).
  std::optional<std::size_t> collapsed_slot;
  // Classes contributed by the connecting map at (0, trivial): new
  // idempotent-type generators, paired with the parent monomials whose
  // tail they extend (even n only).
  std::vector<Poly> tail_images;
};

std::optional<QuotientStep> quotient_step(const SpaceExpr& e,
                                          const ScalarData& k, int bound);

struct BidegreeCheck {
  int degree = 0;
  Twist twist;
  std::string derived, presented;
  bool ok = false;
  bool certified = false;
  std::string note;
};

struct SpaceVerification {
  bool relations_ok = true;
  std::vector<BidegreeCheck> checks;
  std::vector<std::string> log;
  bool all_ok() const;
};

// Verify the candidate quadratic-refinement presentation of a space in
// every bidegree up to max_degree: gluing for torsion-free Chow rings,
// iterated localization quotients when finite factors are present
// (ancestors are verified along the way).
SpaceVerification verify_space(const SpaceTheories& st, int max_degree);

// The I-cohomology presentation must agree with the quadratic refinement
// modulo the images of all hyperbolic maps at the given bidegree.
bool check_icoh_from_quadratic(const SpaceTheories& st, int deg,
                               const Twist& L);

// H^deg at filtration level j. For j < deg only the Witt-free part of the
// diagonal survives; for j > deg each basis monomial contributes a power
// of the fundamental ideal (only meaningful for spaces without finite
// factors, where the cell-by-cell decomposition applies verbatim).
AbGroup icoh_level(const SpaceTheories& st, int deg, int j, const Twist& L);

// Index of the image of the rank projection inside the Chow group at one
// bidegree (1 = surjective; the classical 2Z-convention shows up here).
Int rho_image_index(const SpaceTheories& st, int deg, const Twist& L);

// Comparison of the product ring with the tensor product of the factor
// rings, bidegree by bidegree.
struct KunnethReport {
  SpaceExpr x, y, product;
  bool relations_preserved = true;
  std::vector<BidegreeReport> reports;
  MapVerdict overall = MapVerdict::Neither;
  std::string note;
};

KunnethReport kunneth_verdict(const SpaceAtom& x, const SpaceAtom& y,
                              const FieldModel& f, int bound, int max_degree);

}  // namespace cw
