#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cw/spaces.hpp"

using namespace cw;

namespace {

std::string parse_error_kind(const std::string& text) {
  try {
    SpaceExpr::parse(text);
  } catch (const ParseError& e) {
    return e.kind;
  }
  return "";
}

std::string grp(const SpaceTheories& st, int d, std::vector<int> t) {
  return realize(st.stack.cw, d, Twist{std::move(t)}).group.describe();
}

void expect_all_ok(const SpaceTheories& st, int maxdeg) {
  SpaceVerification v = verify_space(st, maxdeg);
  CHECK(v.relations_ok);
  for (const BidegreeCheck& c : v.checks) {
    CAPTURE(c.degree);
    CAPTURE(c.twist.str());
    CAPTURE(c.note);
    CAPTURE(c.derived);
    CAPTURE(c.presented);
    CHECK(c.ok);
  }
}

}  // namespace

TEST_CASE("expression parsing") {
  CHECK(SpaceExpr::parse("P(3)").str() == "P(3)");
  CHECK(SpaceExpr::parse("BGm").str() == "BGm");
  CHECK(SpaceExpr::parse("Bmu(4)").str() == "Bmu(4)");
  CHECK(SpaceExpr::parse(" P(2)  x P(3) ").str() == "P(2) x P(3)");
  CHECK(SpaceExpr::parse("BGmxBmu(5)").str() == "BGm x Bmu(5)");
  CHECK(SpaceExpr::parse("P(2)").twist_dim() == 1);
  CHECK(SpaceExpr::parse("Bmu(3)").twist_dim() == 0);
  CHECK(SpaceExpr::parse("Bmu(4)").twist_dim() == 1);
  CHECK(SpaceExpr::parse("BGm x Bmu(3)").twist_dim() == 1);

  CHECK(parse_error_kind("P()") == "SyntaxError");
  CHECK(parse_error_kind("Q(2)") == "SyntaxError");
  CHECK(parse_error_kind("P(two)") == "SyntaxError");
  CHECK(parse_error_kind("") == "SyntaxError");
  CHECK(parse_error_kind("BGm x") == "SyntaxError");
  CHECK(parse_error_kind("BGm x BGm x BGm") == "ArityError");
  CHECK(parse_error_kind("P(0)") == "ParamError");
  CHECK(parse_error_kind("Bmu(0)") == "ParamError");
  CHECK(parse_error_kind("P(2)") == "");
}

TEST_CASE("projective spaces verify against the glued groups") {
  for (const char* f : {"C", "R", "F3"}) {
    CAPTURE(f);
    expect_all_ok(build_space("P(2)", f, 6), 3);
  }
  expect_all_ok(build_space("P(3)", "R", 6), 4);
}

TEST_CASE("product of projective spaces") {
  SpaceTheories st = build_space("P(2) x P(2)", "R", 6);
  expect_all_ok(st, 4);
  // Middle bidegree of the untwisted part: three cells contribute.
  CHECK(realize(st.stack.ch, 2, Twist{{0, 0}}).group.describe() == "Z^3");
}

TEST_CASE("classifying space of the torus and its square") {
  for (const char* f : {"C", "R", "F3"}) {
    CAPTURE(f);
    SpaceTheories st = build_space("BGm", f, 6);
    expect_all_ok(st, 4);
    CHECK(isomorphic(realize(st.stack.cw, 0, Twist{{0}}).group,
                     st.stack.k.gw.group));
    CHECK(grp(st, 1, {1}) == "Z");
    CHECK(grp(st, 2, {0}) == "Z");
  }
  expect_all_ok(build_space("BGm x BGm", "R", 6), 3);
}

TEST_CASE("odd cyclic classifying spaces via localization") {
  for (const char* f : {"C", "R", "F3", "F5"}) {
    CAPTURE(f);
    SpaceTheories st = build_space("Bmu(3)", f, 6);
    expect_all_ok(st, 4);
    CHECK(grp(st, 1, {}) == "Z/3");
    CHECK(grp(st, 2, {}) == "Z/3");
  }
  expect_all_ok(build_space("Bmu(5)", "R", 6), 3);
}

TEST_CASE("even cyclic classifying spaces via localization") {
  SpaceTheories st = build_space("Bmu(4)", "R", 6);
  expect_all_ok(st, 4);
  const ScalarData& k = st.stack.k;
  CHECK(isomorphic(realize(st.stack.cw, 0, Twist{{0}}).group,
                   AbGroup::direct_sum(k.gw.group, k.w.group)));
  CHECK(grp(st, 2, {0}) == "Z/8");
  CHECK(grp(st, 1, {1}) == "Z/8");
  CHECK(grp(st, 1, {0}) == "Z/2");

  expect_all_ok(build_space("Bmu(2)", "F3", 6), 3);
}

TEST_CASE("mixed products with finite factors") {
  SpaceTheories st = build_space("BGm x Bmu(3)", "R", 6);
  expect_all_ok(st, 3);
  CHECK(grp(st, 1, {1}) == "Z + Z/3");

  expect_all_ok(build_space("BGm x Bmu(4)", "R", 6), 3);
  expect_all_ok(build_space("Bmu(3) x Bmu(4)", "F3", 6), 3);
}

TEST_CASE("I-cohomology agrees with the quadratic refinement mod hyperbolic") {
  for (const char* sp : {"P(2)", "BGm", "Bmu(4)", "Bmu(3)"}) {
    CAPTURE(sp);
    SpaceTheories st = build_space(sp, "R", 6);
    std::size_t td = st.expr.twist_dim();
    for (int d = 0; d <= 3; ++d)
      for (std::size_t m = 0; m < (std::size_t{1} << td); ++m) {
        Twist t = Twist::trivial(td);
        for (std::size_t i = 0; i < td; ++i) t.bits[i] = (m >> i) & 1;
        CAPTURE(d);
        CAPTURE(t.str());
        CHECK(check_icoh_from_quadratic(st, d, t));
      }
  }
}

TEST_CASE("filtration levels over the real numbers") {
  SpaceTheories st = build_space("BGm", "R", 8);
  // Twisted Euler-class line: a single order-two level in every filtration.
  CHECK(icoh_level(st, 1, 1, Twist{{1}}).describe() == "Z/2");
  CHECK(icoh_level(st, 1, 3, Twist{{1}}).describe() == "Z/2");
  // Untwisted unit in degree 0: powers of the fundamental ideal are free.
  CHECK(icoh_level(st, 0, 0, Twist{{0}}).describe() == "Z");
  CHECK(icoh_level(st, 0, 4, Twist{{0}}).describe() == "Z");

  SpaceTheories stc = build_space("BGm", "C", 8);
  CHECK(icoh_level(stc, 1, 1, Twist{{1}}).describe() == "Z/2");
  CHECK(icoh_level(stc, 1, 2, Twist{{1}}).describe() == "0");
}

TEST_CASE("rank projection hits the doubled Chow classes") {
  SpaceTheories st = build_space("BGm", "R", 6);
  CHECK(rho_image_index(st, 1, Twist{{0}}) == 2);
  CHECK(rho_image_index(st, 1, Twist{{1}}) == 1);

  SpaceTheories sp = build_space("P(2)", "R", 6);
  CHECK(rho_image_index(sp, 1, Twist{{0}}) == 2);
  CHECK(rho_image_index(sp, 1, Twist{{1}}) == 1);
}

TEST_CASE("product ring against the tensor product of the factors") {
  SpaceAtom gm{SpaceAtom::Kind::Gm, 0};
  SpaceAtom mu3{SpaceAtom::Kind::Mu, 3};
  KunnethReport r =
      kunneth_verdict(gm, mu3, FieldModel::parse("R"), 6, 4);
  CHECK(r.relations_preserved);
  CHECK(r.overall == MapVerdict::Iso);
}
