#pragma once

#include "cw/graded.hpp"

namespace cw {

// The four cohomology theories of one space, with the structure maps that
// tie them together, plus the candidate quadratic-refinement presentation
// to verify against.
struct TheoryStack {
  ScalarData k;

  RingPresentation ch;    // integral Chow: Z coefficients, untwisted gens
  RingPresentation ch2;   // mod-2 Chow
  RingPresentation hI;    // I-cohomology: Witt coefficients, twisted
  RingPresentation cw;    // candidate Chow-Witt presentation, GW coefficients

  GenMap mod2;    // ch -> ch2 (reduce coefficients)
  GenMap rho;     // hI -> ch2 (rank mod 2 on coefficients)
  GenMap cw_hI;   // cw -> hI  (first component of the gluing)
  GenMap cw_ch;   // cw -> ch  (second component)

  // Lift of each ch generator to hI (used to evaluate the twisted
  // Bockstein on monomials) and the Euler class attached to each nonzero
  // twist difference, indexed by bitmask over the twist slots.
  std::vector<Poly> ch_lift_hI;
  std::map<std::vector<int>, Poly> twist_euler;
};

// The twisted boundary Chow -> hI^(deg+1) in twist L, evaluated monomial by
// monomial: reduce mod 2, lift along rho, multiply by the Euler class of
// the line bundle measuring the twist mismatch.
Hom boundary_hom(const TheoryStack& s, int deg, const Twist& L,
                 const Realization& ch_r, const Realization& hi_next);

struct FiberAssembly {
  AbGroup group;           // the derived group at this bidegree
  AbGroup hI_part;         // realization of hI there
  AbGroup ker_boundary;    // kernel of the twisted boundary inside ch
  bool injectivity_certified = false;  // ch has no 2-torsion at this degree
};

// Glue hI and ker(boundary) over ch2 at one bidegree.
FiberAssembly assemble_bidegree(const TheoryStack& s, int deg, const Twist& L);

struct StackReport {
  int degree = 0;
  Twist twist;
  std::string derived;    // group glued from the underlying theories
  std::string presented;  // realization of the candidate presentation
  bool groups_match = false;
  bool map_is_iso = false;  // generator correspondence induces an iso
  bool certified = false;
};

// Verify the candidate presentation bidegree by bidegree: its realization
// must map isomorphically onto the glued group via (cw_hI, cw_ch), and the
// generator maps must kill every relation.
struct StackVerification {
  bool relations_die_in_hI = false;
  bool relations_die_in_ch = false;
  std::vector<StackReport> reports;
  bool all_match() const;
};
StackVerification verify_chow_witt(const TheoryStack& s, int max_degree);

// im(rho) = ker(boundary-from-ch2) at the given bidegree.
bool check_bar_exactness(const TheoryStack& s, int deg, const Twist& L);

// boundary . mod2 . (multiplication by 2) vanishes on ch, i.e. the
// boundary is 2-torsion; a direct consequence of rho . hyperbolic = 2.
bool check_boundary_kills_doubles(const TheoryStack& s, int deg,
                                  const Twist& L);

}  // namespace cw
