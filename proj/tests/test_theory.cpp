#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cw/theory.hpp"

using namespace cw;

namespace {

// Hand-built stack for the classifying space of the multiplicative group,
// truncated at the given bound: one Chern class c, one Euler class e in the
// twisted line, one degree-0 hyperbolic class H with H^2 = 2h.
TheoryStack gm_stack(const std::string& field, int bound) {
  TheoryStack s;
  s.k = make_scalar_data(FieldModel::parse(field));

  Generator c{"c", 1, Twist{{0}}, false, bound + 1, {}};
  s.ch = RingPresentation(integer_ring(), {}, {c}, {}, 1);
  Generator cb = c;
  s.ch2 = RingPresentation(mod2_ring(), {}, {cb}, {}, 1);

  std::vector<Vec> ideal_w;
  for (const Vec& g : s.k.ideal_gw) ideal_w.push_back(s.k.gw_to_w_matrix * g);
  Generator e{"e", 1, Twist{{1}}, true, bound + 1, {}};
  s.hI = RingPresentation(s.k.w, ideal_w, {e}, {}, 1);

  Generator ecw{"e", 1, Twist{{1}}, true, bound + 1, {}};
  Poly two_h;
  two_h[Exponents{0, 0}] = s.k.gw.scale(2, s.k.h_gw);
  Generator hcw{"H", 0, Twist{{1}}, true, 2, two_h};
  s.cw = RingPresentation(s.k.gw, s.k.ideal_gw, {ecw, hcw}, {}, 1);

  s.mod2 = {{s.ch2.gen_poly("c")}, Mat{{1}}};
  s.rho = {{s.ch2.gen_poly("c")}, s.k.w_rank2_matrix};
  s.cw_hI = {{s.hI.gen_poly("e"), s.hI.zero_poly()}, s.k.gw_to_w_matrix};
  s.cw_ch = {{s.ch.gen_poly("c"), s.ch.scalar_poly(Vec{2})}, s.k.rank_matrix};

  s.ch_lift_hI = {s.hI.gen_poly("e")};
  s.twist_euler[{1}] = s.hI.gen_poly("e");
  return s;
}

}  // namespace

TEST_CASE("gluing reproduces the twisted groups of the multiplicative group") {
  for (const char* f : {"C", "R", "F3"}) {
    CAPTURE(f);
    TheoryStack s = gm_stack(f, 6);

    FiberAssembly a0 = assemble_bidegree(s, 0, Twist{{0}});
    CHECK(isomorphic(a0.group, s.k.gw.group));
    CHECK(a0.injectivity_certified);

    FiberAssembly a0t = assemble_bidegree(s, 0, Twist{{1}});
    CHECK(a0t.group.describe() == "Z");

    for (int i = 1; i <= 4; ++i) {
      CAPTURE(i);
      for (int t : {0, 1}) {
        FiberAssembly ai = assemble_bidegree(s, i, Twist{{t}});
        CHECK(ai.group.describe() == "Z");
      }
    }
  }
}

TEST_CASE("candidate presentation is verified bidegree by bidegree") {
  for (const char* f : {"C", "R", "F3", "F5"}) {
    CAPTURE(f);
    TheoryStack s = gm_stack(f, 6);
    StackVerification v = verify_chow_witt(s, 4);
    CHECK(v.relations_die_in_hI);
    CHECK(v.relations_die_in_ch);
    for (const auto& r : v.reports) {
      CAPTURE(r.degree);
      CAPTURE(r.twist.str());
      CHECK(r.groups_match);
      CHECK(r.map_is_iso);
      CHECK(r.certified);
    }
  }
}

TEST_CASE("exactness of the mod-2 sequence at each bidegree") {
  for (const char* f : {"C", "R", "F3"}) {
    CAPTURE(f);
    TheoryStack s = gm_stack(f, 8);
    for (int d = 0; d <= 5; ++d)
      for (int t : {0, 1}) {
        CAPTURE(d);
        CAPTURE(t);
        CHECK(check_bar_exactness(s, d, Twist{{t}}));
      }
  }
}

TEST_CASE("the boundary kills doubled classes") {
  for (const char* f : {"C", "R", "F5"}) {
    CAPTURE(f);
    TheoryStack s = gm_stack(f, 8);
    for (int d = 0; d <= 5; ++d)
      for (int t : {0, 1}) CHECK(check_boundary_kills_doubles(s, d, Twist{{t}}));
  }
}

TEST_CASE("truncation bound does not leak into low bidegrees") {
  for (int b1 : {6, 8}) {
    TheoryStack s1 = gm_stack("R", b1);
    TheoryStack s2 = gm_stack("R", b1 + 2);
    for (int d = 0; d <= b1 - 2; ++d)
      for (int t : {0, 1}) {
        CAPTURE(b1);
        CAPTURE(d);
        FiberAssembly x = assemble_bidegree(s1, d, Twist{{t}});
        FiberAssembly y = assemble_bidegree(s2, d, Twist{{t}});
        CHECK(isomorphic(x.group, y.group));
      }
  }
}
