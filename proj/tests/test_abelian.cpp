#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cw/abelian.hpp"

using namespace cw;

TEST_CASE("presentations normalize to invariant factors") {
  AbGroup g(2, Mat{{2, 0}, {0, 4}});
  CHECK(g.describe() == "Z/2 + Z/4");
  CHECK(g.order() == 8);
  CHECK(g.has_two_torsion());

  AbGroup z2 = AbGroup::free_group(2);
  CHECK(z2.describe() == "Z^2");
  CHECK(z2.order() == 0);
  CHECK(!z2.has_two_torsion());

  CHECK(AbGroup::trivial().describe() == "0");
  CHECK(isomorphic(AbGroup(1, Mat{{1}}), AbGroup::trivial()));
}

TEST_CASE("element identity modulo relations") {
  AbGroup g = AbGroup::cyclic(6);
  CHECK(g.same_element(Vec{7}, Vec{1}));
  CHECK(!g.same_element(Vec{3}, Vec{1}));
  CHECK(g.is_zero_element(Vec{-12}));
}

TEST_CASE("kernel of multiplication by n on Z/m") {
  // x -> 2x on Z/6 has kernel Z/2 generated by 3.
  AbGroup z6 = AbGroup::cyclic(6);
  Hom f(z6, z6, Mat{{2}});
  Subquotient k = kernel(f);
  CHECK(isomorphic(k.group, AbGroup::cyclic(2)));
}

TEST_CASE("kernel of the projection Z -> Z/n") {
  AbGroup z = AbGroup::free_group(1);
  Hom f(z, AbGroup::cyclic(4), Mat{{1}});
  Subquotient k = kernel(f);
  CHECK(isomorphic(k.group, z));
  // The inclusion lands on multiples of 4.
  SmithForm s = smith_normal_form(k.embedding);
  CHECK(s.d(0, 0) == 4);
}

TEST_CASE("cokernel of multiplication by 3 on Z^2") {
  AbGroup z2 = AbGroup::free_group(2);
  Hom f(z2, z2, Mat{{3, 0}, {0, 3}});
  Quotient q = cokernel(f);
  CHECK(q.group.describe() == "Z/3 + Z/3");
}

TEST_CASE("fiber product of two reductions to Z/2") {
  // Z -> Z/2 <- Z: pairs (a, b) with a = b mod 2, isomorphic to Z^2.
  AbGroup z = AbGroup::free_group(1);
  AbGroup z2 = AbGroup::cyclic(2);
  Hom f(z, z2, Mat{{1}});
  FiberProduct fp = fiber_product(f, f);
  CHECK(isomorphic(fp.group, AbGroup::free_group(2)));
  // Projections commute with the defining condition: f(p1(x)) = f(p2(x)).
  for (std::size_t j = 0; j < fp.group.n_gens(); ++j) {
    Vec e(fp.group.n_gens());
    e[j] = 1;
    Vec a = fp.to_first.apply(e), b = fp.to_second.apply(e);
    CHECK(z2.same_element(f.apply(a), f.apply(b)));
  }
}

TEST_CASE("fiber product detects torsion gluing") {
  // Z/4 -> Z/2 <- Z/4 (both reductions): order 8 group.
  AbGroup z4 = AbGroup::cyclic(4);
  AbGroup z2 = AbGroup::cyclic(2);
  Hom f(z4, z2, Mat{{1}});
  FiberProduct fp = fiber_product(f, f);
  CHECK(fp.group.order() == 8);
}

TEST_CASE("image and preimage") {
  AbGroup z = AbGroup::free_group(1);
  AbGroup z12 = AbGroup::cyclic(12);
  Hom f(z, z12, Mat{{4}});
  CHECK(isomorphic(image(f), AbGroup::cyclic(3)));
  auto x = preimage(f, Vec{8});
  REQUIRE(x.has_value());
  CHECK(z12.same_element(f.apply(*x), Vec{8}));
  CHECK(!preimage(f, Vec{2}).has_value());
}

TEST_CASE("express elements in terms of chosen generators") {
  AbGroup g(2, Mat{{4, 0}, {0, 4}});
  std::vector<Vec> gens{{1, 1}, {0, 2}};
  auto c = express(g, gens, Vec{3, 1});
  REQUIRE(c.has_value());
  Vec combo{(*c)[0] * gens[0][0] + (*c)[1] * gens[1][0],
            (*c)[0] * gens[0][1] + (*c)[1] * gens[1][1]};
  CHECK(g.same_element(combo, Vec{3, 1}));
  CHECK(!express(g, gens, Vec{1, 0}).has_value());
}

TEST_CASE("subgroup index") {
  AbGroup z = AbGroup::free_group(1);
  CHECK(subgroup_index(z, {Vec{2}}) == 2);
  CHECK(subgroup_index(z, {Vec{1}}) == 1);
  CHECK(subgroup_index(z, {}) == 0);
}

TEST_CASE("quotient by explicit generators") {
  AbGroup z2 = AbGroup::free_group(2);
  Quotient q = quotient_by(z2, {Vec{2, 0}, Vec{0, 3}});
  CHECK(isomorphic(q.group, AbGroup::cyclic(6)));
}
