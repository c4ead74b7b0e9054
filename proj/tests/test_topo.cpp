#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cw/topo.hpp"

using namespace cw;

TEST_CASE("cohomology of real projective spaces") {
  GradedCyclic p2 = projective_space_cohomology(2, false, 2);
  CHECK(graded_at(p2, 0).describe() == "Z");
  CHECK(graded_at(p2, 1).describe() == "0");
  CHECK(graded_at(p2, 2).describe() == "Z/2");

  GradedCyclic p2t = projective_space_cohomology(2, true, 2);
  CHECK(graded_at(p2t, 0).describe() == "0");
  CHECK(graded_at(p2t, 1).describe() == "Z/2");
  CHECK(graded_at(p2t, 2).describe() == "Z");

  GradedCyclic p3 = projective_space_cohomology(3, false, 3);
  CHECK(graded_at(p3, 2).describe() == "Z/2");
  CHECK(graded_at(p3, 3).describe() == "Z");

  GradedCyclic inf = projective_space_cohomology(-1, false, 6);
  CHECK(graded_at(inf, 4).describe() == "Z/2");
  CHECK(graded_at(inf, 5).describe() == "0");
  CHECK(graded_at(inf, 6).describe() == "Z/2");
}

TEST_CASE("products via the Kunneth formula with torsion") {
  GradedCyclic inf = projective_space_cohomology(-1, false, 8);
  GradedCyclic sq = kunneth_product(inf, inf, 8);
  CHECK(graded_at(sq, 0).describe() == "Z");
  CHECK(graded_at(sq, 1).describe() == "0");
  CHECK(graded_at(sq, 2).describe() == "Z/2 + Z/2");
  CHECK(graded_at(sq, 3).describe() == "Z/2");     // the Tor class
  CHECK(graded_at(sq, 4).describe() == "Z/2 + Z/2 + Z/2");
  CHECK(graded_at(sq, 5).describe() == "Z/2 + Z/2");
  CHECK(graded_at(sq, 6).describe() == "Z/2 + Z/2 + Z/2 + Z/2");
}

TEST_CASE("real points of the catalog spaces") {
  SpaceExpr bmu4 = SpaceExpr::parse("Bmu(4)");
  GradedCyclic h = real_points_cohomology(bmu4, Twist{{0}}, 4);
  CHECK(graded_at(h, 0).describe() == "Z^2");
  CHECK(graded_at(h, 2).describe() == "Z/2 + Z/2");

  SpaceExpr bmu3 = SpaceExpr::parse("BGm x Bmu(3)");
  GradedCyclic g = real_points_cohomology(bmu3, Twist{{1}}, 4);
  CHECK(graded_at(g, 1).describe() == "Z/2");
  CHECK(graded_at(g, 2).describe() == "0");
}

TEST_CASE("filtration levels match the real points on torsion-free spaces") {
  for (const char* sp : {"P(2)", "P(3)", "BGm", "P(2) x P(3)", "Bmu(3)"}) {
    CAPTURE(sp);
    SpaceTheories st = build_space(sp, "R", 8);
    for (const CycleClassReport& r : cycle_class_sweep(st, 4, 3)) {
      CAPTURE(r.degree);
      CAPTURE(r.level);
      CAPTURE(r.twist.str());
      CAPTURE(r.algebraic);
      CAPTURE(r.topological);
      CHECK(r.expected_match);
      CHECK(r.match);
    }
  }
}

TEST_CASE("even finite factors disagree exactly where the model drops classes") {
  SpaceTheories st = build_space("Bmu(4)", "R", 8);
  for (const CycleClassReport& r : cycle_class_sweep(st, 5, 0)) {
    CAPTURE(r.degree);
    CAPTURE(r.algebraic);
    CAPTURE(r.topological);
    CHECK(r.match == r.expected_match);
  }
}

TEST_CASE("integral ring of the real points of the torus square") {
  SpaceTheories st = build_space("BGm x BGm", "R", 10);
  CHECK(check_torus_square_ring_embedding(st, 8));
}
