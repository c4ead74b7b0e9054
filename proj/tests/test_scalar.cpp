#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cw/scalar.hpp"

using namespace cw;

TEST_CASE("field model parsing") {
  CHECK(FieldModel::parse("C").kind == FieldKind::QuadClosed);
  CHECK(FieldModel::parse("R").kind == FieldKind::RealClosed);
  CHECK(FieldModel::parse("F7").q == 7);
  CHECK_THROWS(FieldModel::parse("F4"));
  CHECK_THROWS(FieldModel::parse("F9"));
  CHECK_THROWS(FieldModel::parse("Q"));
}

TEST_CASE("witt classification over small finite fields") {
  for (int q : {3, 5, 7, 11, 13}) {
    CAPTURE(q);
    WittClassification wc = classify_witt_finite(q);
    CHECK(wc.witt.order() == 4);
    // -1 is a square exactly when q = 1 mod 4.
    CHECK(wc.minus_one_square == (q % 4 == 1));
    if (q % 4 == 1) {
      CHECK(isomorphic(wc.witt,
                       AbGroup(2, Mat{{2, 0}, {0, 2}})));
    } else {
      CHECK(isomorphic(wc.witt, AbGroup::cyclic(4)));
      // In the cyclic case <a> = 3<1>: their difference doubled vanishes
      // and <1> + <a> is the hyperbolic class.
      CHECK(wc.witt.is_zero_element(Vec{1, 1}));
    }
  }
}

TEST_CASE("scalar data over the quadratically closed field") {
  ScalarData d = make_scalar_data(FieldModel::parse("C"));
  CHECK(isomorphic(d.gw.group, AbGroup::free_group(1)));
  CHECK(isomorphic(d.w.group, AbGroup::cyclic(2)));
  CHECK(d.h_gw == Vec{2});
  CHECK(d.ibar_order2(0) == 1);
  CHECK(d.ibar_order2(1) == 0);
  CHECK(d.ibar_order2(5) == 0);
}

TEST_CASE("scalar data over the real closed field") {
  ScalarData d = make_scalar_data(FieldModel::parse("R"));
  CHECK(isomorphic(d.gw.group, AbGroup::free_group(2)));
  CHECK(isomorphic(d.w.group, AbGroup::free_group(1)));
  // Signature of h is zero; rank is 2.
  CHECK(d.w.group.is_zero_element(d.gw_to_w_matrix * d.h_gw));
  CHECK((d.rank_matrix * d.h_gw) == Vec{2});
  // I^j = 2^j Z, so every graded layer has order 2.
  for (int j = 0; j <= 8; ++j) CHECK(d.ibar_order2(j) == 1);
  // I^3 is generated by multiples of 8 up to sign.
  auto p3 = d.ideal_power_w(3);
  REQUIRE(!p3.empty());
  for (const auto& g : p3) CHECK(g[0] % 8 == 0);
}

TEST_CASE("scalar data over finite fields") {
  for (int q : {3, 5}) {
    CAPTURE(q);
    ScalarData d = make_scalar_data(FieldModel::parse("F" + std::to_string(q)));
    // GW: Z + Z/2 as a group.
    CHECK(isomorphic(d.gw.group, AbGroup::direct_sum(AbGroup::free_group(1),
                                                     AbGroup::cyclic(2))));
    CHECK((d.rank_matrix * d.h_gw) == Vec{2});
    CHECK(d.w.group.is_zero_element(d.gw_to_w_matrix * d.h_gw));
    // 2(<a> - <1>) = 0 in GW.
    Vec twice{-2, 2};
    CHECK(d.gw.group.is_zero_element(twice));
    CHECK(d.ibar_order2(0) == 1);
    CHECK(d.ibar_order2(1) == 1);
    CHECK(d.ibar_order2(2) == 0);
    CHECK(d.ibar_order2(3) == 0);
  }
}

TEST_CASE("ring axioms on the scalar multiplication tables") {
  for (const char* f : {"C", "R", "F3", "F5", "F7"}) {
    CAPTURE(f);
    ScalarData d = make_scalar_data(FieldModel::parse(f));
    for (const ScalarRing* r : {&d.gw, &d.w}) {
      std::size_t n = r->group.n_gens();
      for (std::size_t i = 0; i < n; ++i) {
        Vec ei(n);
        ei[i] = 1;
        CHECK(r->group.same_element(r->multiply(r->one, ei), ei));
        for (std::size_t j = 0; j < n; ++j) {
          Vec ej(n);
          ej[j] = 1;
          CHECK(r->group.same_element(r->multiply(ei, ej),
                                      r->multiply(ej, ei)));
          for (std::size_t k = 0; k < n; ++k) {
            Vec ek(n);
            ek[k] = 1;
            CHECK(r->group.same_element(
                r->multiply(r->multiply(ei, ej), ek),
                r->multiply(ei, r->multiply(ej, ek))));
          }
        }
      }
    }
  }
}
