#pragma once

#include "cw/spaces.hpp"

namespace cw {

// Cohomology of a space, one list of cyclic factors per degree; order 0
// denotes an infinite factor.
using GradedCyclic = std::vector<std::vector<Int>>;

AbGroup graded_at(const GradedCyclic& g, int deg);

// Integral cohomology of real projective n-space from its cellular cochain
// complex, with coefficients in the orientation system when `twisted`.
// n < 0 means the infinite projective space.
GradedCyclic projective_space_cohomology(int n, bool twisted, int max_deg);

GradedCyclic kunneth_product(const GradedCyclic& a, const GradedCyclic& b,
                             int max_deg);
GradedCyclic disjoint_union(const GradedCyclic& a, const GradedCyclic& b);

// Singular cohomology of the real points of a catalog space with the
// rank-one local system attached to the twist.
GradedCyclic real_points_cohomology(const SpaceExpr& e, const Twist& L,
                                    int max_deg);

struct CycleClassReport {
  int degree = 0;
  int level = 0;
  Twist twist;
  std::string algebraic, topological;
  bool match = false;
  bool expected_match = true;
};

// Compare filtration levels of the derived groups against the real points,
// over a real closed base. Spaces without finite factors (odd-order
// factors are invisible on both sides): every twist, every level from the
// degree up by extra_levels. With an even-order finite factor: untwisted
// diagonal only; mixed idempotent classes drop out of the levels, so
// positive even degrees are expected to disagree.
std::vector<CycleClassReport> cycle_class_sweep(const SpaceTheories& st,
                                                int max_deg, int extra_levels);

// The untwisted part of the I-cohomology of the torus-square classifying
// space against the integral cohomology ring of the real points: the ring
// on two degree-2 classes and one degree-3 class, all of order two, with
// the single relation in degree 6, must map onto it degree by degree.
bool check_torus_square_ring_embedding(const SpaceTheories& st, int max_deg);

}  // namespace cw
