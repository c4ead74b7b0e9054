#include "cw/topo.hpp"

#include <numeric>

namespace cw {

AbGroup graded_at(const GradedCyclic& g, int deg) {
  AbGroup out = AbGroup::trivial();
  if (deg < 0 || deg >= static_cast<int>(g.size())) return out;
  for (const Int& c : g[deg]) out = AbGroup::direct_sum(out, AbGroup::cyclic(c));
  return out;
}

GradedCyclic projective_space_cohomology(int n, bool twisted, int max_deg) {
  int top = n < 0 ? max_deg + 2 : n;
  // One cell per dimension; the antipodal action makes the coboundary
  // alternate between 0 and multiplication by 2, with the phase flipped by
  // the orientation system.
  auto diff = [&](int i) { return (i % 2 == 0) == twisted ? Int(2) : Int(0); };
  GradedCyclic h(max_deg + 1);
  for (int i = 0; i <= max_deg; ++i) {
    if (i > top) continue;
    bool full_kernel = i == top || diff(i) == 0;
    if (!full_kernel) continue;
    Int im = i == 0 ? Int(0) : diff(i - 1);
    if (im == 0)
      h[i].push_back(0);
    else
      h[i].push_back(im);
  }
  return h;
}

GradedCyclic kunneth_product(const GradedCyclic& a, const GradedCyclic& b,
                             int max_deg) {
  GradedCyclic h(max_deg + 1);
  auto at = [](const GradedCyclic& g, int i) {
    static const std::vector<Int> none;
    return i >= 0 && i < static_cast<int>(g.size()) ? g[i] : none;
  };
  for (int n = 0; n <= max_deg; ++n) {
    for (int p = 0; p <= n; ++p)
      for (const Int& x : at(a, p))
        for (const Int& y : at(b, n - p)) {
          Int t = x == 0 ? y : y == 0 ? x : gcd(x, y);
          if (t == 0 || t > 1) h[n].push_back(t);
        }
    for (int p = 0; p <= n + 1; ++p)
      for (const Int& x : at(a, p))
        for (const Int& y : at(b, n + 1 - p)) {
          if (x == 0 || y == 0) continue;  // Tor vanishes on free factors
          Int t = gcd(x, y);
          if (t > 1) h[n].push_back(t);
        }
  }
  return h;
}

GradedCyclic disjoint_union(const GradedCyclic& a, const GradedCyclic& b) {
  GradedCyclic h(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i < a.size()) h[i].insert(h[i].end(), a[i].begin(), a[i].end());
    if (i < b.size()) h[i].insert(h[i].end(), b[i].begin(), b[i].end());
  }
  return h;
}

namespace {

GradedCyclic factor_cohomology(const SpaceAtom& atom, bool twisted,
                               int max_deg) {
  switch (atom.kind) {
    case SpaceAtom::Kind::Proj:
      return projective_space_cohomology(atom.param, twisted, max_deg);
    case SpaceAtom::Kind::Gm:
      return projective_space_cohomology(-1, twisted, max_deg);
    case SpaceAtom::Kind::Mu:
      if (atom.param % 2 == 1) {
        // Odd order: a single real point.
        GradedCyclic h(max_deg + 1);
        h[0].push_back(0);
        return h;
      }
      // Even order: two components, each an infinite projective space.
      {
        GradedCyclic c = projective_space_cohomology(-1, twisted, max_deg);
        return disjoint_union(c, c);
      }
  }
  throw std::logic_error("unknown factor");
}

}  // namespace

GradedCyclic real_points_cohomology(const SpaceExpr& e, const Twist& L,
                                    int max_deg) {
  if (L.dim() != e.twist_dim())
    throw std::invalid_argument("twist dimension mismatch");
  GradedCyclic h(max_deg + 1);
  h[0].push_back(0);
  std::size_t pos = 0;
  for (const SpaceAtom& atom : e.factors) {
    bool tw = atom.twist_slots() > 0 && L.bits[pos] == 1;
    pos += atom.twist_slots();
    h = kunneth_product(h, factor_cohomology(atom, tw, max_deg), max_deg);
  }
  return h;
}

std::vector<CycleClassReport> cycle_class_sweep(const SpaceTheories& st,
                                                int max_deg, int extra_levels) {
  if (st.field.kind != FieldKind::RealClosed)
    throw std::invalid_argument("real points require a real closed base");

  bool has_even_mu = false;
  for (const SpaceAtom& a : st.expr.factors)
    if (a.kind == SpaceAtom::Kind::Mu && a.param % 2 == 0) has_even_mu = true;

  std::size_t td = st.expr.twist_dim();
  std::vector<CycleClassReport> out;
  for (int deg = 0; deg <= max_deg; ++deg) {
    std::size_t masks = has_even_mu ? 1 : (std::size_t{1} << td);
    for (std::size_t m = 0; m < masks; ++m) {
      Twist L = Twist::trivial(td);
      for (std::size_t i = 0; i < td; ++i) L.bits[i] = (m >> i) & 1;
      GradedCyclic topo = real_points_cohomology(st.expr, L, max_deg);
      AbGroup t = graded_at(topo, deg);
      int top_level = has_even_mu ? deg : deg + extra_levels;
      for (int j = deg; j <= top_level; ++j) {
        AbGroup alg = icoh_level(st, deg, j, L);
        CycleClassReport r;
        r.degree = deg;
        r.level = j;
        r.twist = L;
        r.algebraic = alg.describe();
        r.topological = t.describe();
        r.match = isomorphic(alg, t);
        // Mixed idempotent-Euler classes are dropped from the levels, so
        // positive even untwisted degrees lose one component's worth.
        r.expected_match = !(has_even_mu && deg > 0 && deg % 2 == 0);
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

bool check_torus_square_ring_embedding(const SpaceTheories& st, int max_deg) {
  const RingPresentation& hi = st.stack.hI;
  const ScalarData& k = st.stack.k;

  Generator lam{"lam", 2, Twist::trivial(0), false, -1, {}};
  Generator mu{"mu", 2, Twist::trivial(0), false, -1, {}};
  Poly nu_sq;
  nu_sq[Exponents{2, 1, 0}] = Vec{1};
  nu_sq[Exponents{1, 2, 0}] = Vec{1};
  Generator nu{"nu", 3, Twist::trivial(0), false, 2, nu_sq};
  std::vector<Poly> rels;
  for (int g = 0; g < 3; ++g) {
    Poly two;
    Exponents e(3, 0);
    e[g] = 1;
    two[e] = Vec{2};
    rels.push_back(two);
  }
  RingPresentation target(integer_ring(), {}, {lam, mu, nu}, rels, 0);

  GenMap gm;
  gm.images.push_back(hi.gen_poly("e_1", 2));
  gm.images.push_back(hi.gen_poly("e_2", 2));
  gm.images.push_back(hi.multiply(hi.multiply(hi.gen_poly("e_1"),
                                              hi.gen_poly("e_2")),
                                  hi.gen_poly("e_3")));
  Mat sm(k.w.group.n_gens(), 1);
  for (std::size_t i = 0; i < k.w.one.size(); ++i) sm(i, 0) = k.w.one[i];
  gm.scalar_map = sm;

  // Relations of the comparison ring must die in the I-cohomology.
  for (const Poly& r : target.relations()) {
    Poly img = apply_gen_map(target, hi, gm, r);
    if (img.empty()) continue;
    int d = hi.mono_degree(img.begin()->first);
    Realization rb = realize(hi, d, hi.mono_twist(img.begin()->first));
    Vec c = rb.coords(img);
    if (!rb.group.is_zero_element(c)) return false;
  }

  Twist untw = Twist::trivial(hi.twist_dim());
  for (int d = 0; d <= max_deg; ++d) {
    Realization ra = realize(target, d, Twist::trivial(0));
    Realization rb = realize(hi, d, untw);
    Hom f = induced_hom(target, ra, hi, rb, gm);
    if (classify_hom(f) != MapVerdict::Iso) return false;
  }
  return true;
}

}  // namespace cw
