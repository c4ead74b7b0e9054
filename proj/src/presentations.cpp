#include "cw/spaces.hpp"

#include <algorithm>
#include <sstream>

namespace cw {

std::string SpaceAtom::str() const {
  switch (kind) {
    case Kind::Proj: return "P(" + std::to_string(param) + ")";
    case Kind::Gm: return "BGm";
    case Kind::Mu: return "Bmu(" + std::to_string(param) + ")";
  }
  return "?";
}

std::size_t SpaceAtom::twist_slots() const {
  if (kind == Kind::Mu && param % 2 == 1) return 0;
  return 1;
}

std::string SpaceExpr::str() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " x ";
    s += factors[i].str();
  }
  return s;
}

std::size_t SpaceExpr::twist_dim() const {
  std::size_t d = 0;
  for (const SpaceAtom& a : factors) d += a.twist_slots();
  return d;
}

bool SpaceExpr::has_mu() const {
  return std::any_of(factors.begin(), factors.end(), [](const SpaceAtom& a) {
    return a.kind == SpaceAtom::Kind::Mu;
  });
}

namespace {

// Incremental presentation assembly: declare every generator first, then
// build polynomials by name.
class PresBuilder {
public:
  PresBuilder(ScalarRing scalar, std::vector<Vec> ideal, std::size_t tdim)
      : scalar_(std::move(scalar)), ideal_(std::move(ideal)), tdim_(tdim) {}

  void gen(const std::string& name, int degree, std::vector<int> twist,
           bool ideal_kills, int cap = -1) {
    Generator g;
    g.name = name;
    g.degree = degree;
    g.twist = Twist{std::move(twist)};
    g.ideal_kills = ideal_kills;
    g.power_cap = cap;
    idx_[name] = gens_.size();
    gens_.push_back(std::move(g));
  }

  bool has(const std::string& name) const { return idx_.count(name) > 0; }

  // c * prod of named powers, c an integer multiple of 1.
  Poly term(const Int& c,
            const std::vector<std::pair<std::string, int>>& monos) const {
    return term_vec(scalar_.scale(c, scalar_.one), monos);
  }
  Poly term_vec(const Vec& c,
                const std::vector<std::pair<std::string, int>>& monos) const {
    Exponents e(gens_.size(), 0);
    for (const auto& [n, p] : monos) e[idx_.at(n)] += p;
    Poly out;
    out[e] = c;
    return out;
  }

  static Poly sum(std::initializer_list<Poly> ps) {
    Poly out;
    for (const Poly& p : ps)
      for (const auto& [e, c] : p) {
        Vec& slot = out.try_emplace(e, Vec(c.size())).first->second;
        for (std::size_t k = 0; k < c.size(); ++k) slot[k] += c[k];
      }
    return out;
  }

  void rewrite(const std::string& name, Poly p) {
    gens_[idx_.at(name)].rewrite = std::move(p);
  }

  void rel(Poly p) { rels_.push_back(std::move(p)); }

  RingPresentation build() const {
    return RingPresentation(scalar_, ideal_, gens_, rels_, tdim_);
  }

private:
  ScalarRing scalar_;
  std::vector<Vec> ideal_;
  std::size_t tdim_;
  std::vector<Generator> gens_;
  std::map<std::string, std::size_t> idx_;
  std::vector<Poly> rels_;
};

std::vector<int> bits(std::size_t dim, std::initializer_list<std::size_t> on) {
  std::vector<int> b(dim, 0);
  for (std::size_t i : on) b[i] = 1;
  return b;
}

// Suffix for slot s in a product, empty for a single factor.
std::string sfx(const SpaceExpr& e, std::size_t s) {
  return e.factors.size() == 1 ? "" : "_" + std::to_string(s + 1);
}

// Twist coordinate of factor s, if it has one.
std::optional<std::size_t> slot_pos(const SpaceExpr& e, std::size_t s) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < s; ++i) pos += e.factors[i].twist_slots();
  if (e.factors[s].twist_slots() == 0) return std::nullopt;
  return pos;
}

int e_cap(const SpaceAtom& a, int bound) {
  return a.kind == SpaceAtom::Kind::Proj ? a.param + 1 : bound + 3;
}

void require_supported(const SpaceExpr& e) {
  if (e.factors.empty() || e.factors.size() > 2)
    throw ParseError("ArityError", "expected one or two factors");
  if (e.factors.size() == 2) {
    bool p1 = e.factors[0].kind == SpaceAtom::Kind::Proj;
    bool p2 = e.factors[1].kind == SpaceAtom::Kind::Proj;
    if (p1 != p2)
      throw std::invalid_argument(
          "unsupported product: projective factors only combine with "
          "projective factors");
  }
}

}  // namespace

RingPresentation chow_presentation(const SpaceExpr& e, int bound) {
  require_supported(e);
  PresBuilder b(integer_ring(), {}, e.twist_dim());
  std::size_t td = e.twist_dim();
  for (std::size_t s = 0; s < e.factors.size(); ++s)
    b.gen("c" + sfx(e, s), 1, std::vector<int>(td, 0), false,
          e_cap(e.factors[s], bound));
  for (std::size_t s = 0; s < e.factors.size(); ++s)
    if (e.factors[s].kind == SpaceAtom::Kind::Mu)
      b.rel(b.term(e.factors[s].param, {{"c" + sfx(e, s), 1}}));
  return b.build();
}

RingPresentation chow_mod2_presentation(const SpaceExpr& e, int bound) {
  require_supported(e);
  PresBuilder b(mod2_ring(), {}, e.twist_dim());
  std::size_t td = e.twist_dim();
  for (std::size_t s = 0; s < e.factors.size(); ++s)
    b.gen("c" + sfx(e, s), 1, std::vector<int>(td, 0), false,
          e_cap(e.factors[s], bound));
  for (std::size_t s = 0; s < e.factors.size(); ++s)
    if (e.factors[s].kind == SpaceAtom::Kind::Mu)
      b.rel(b.term(e.factors[s].param, {{"c" + sfx(e, s), 1}}));
  return b.build();
}

RingPresentation icoh_presentation(const SpaceExpr& e, const ScalarData& k,
                                   int bound) {
  require_supported(e);
  std::vector<Vec> ideal_w;
  for (const Vec& g : k.ideal_gw) ideal_w.push_back(k.gw_to_w_matrix * g);
  std::size_t td = e.twist_dim();
  PresBuilder b(k.w, ideal_w, td);

  // Idempotent-type degree-0 classes of even finite factors.
  for (std::size_t s = 0; s < e.factors.size(); ++s) {
    const SpaceAtom& a = e.factors[s];
    if (a.kind == SpaceAtom::Kind::Mu && a.param % 2 == 0)
      b.gen("U" + sfx(e, s), 0, std::vector<int>(td, 0), false, 2);
  }
  // Euler classes: one per twist coordinate, except odd finite factors.
  for (std::size_t s = 0; s < e.factors.size(); ++s) {
    const SpaceAtom& a = e.factors[s];
    if (a.kind == SpaceAtom::Kind::Mu && a.param % 2 == 1) continue;
    b.gen("e" + sfx(e, s), 1, bits(td, {*slot_pos(e, s)}), true,
          e_cap(a, bound));
  }
  bool diag = b.has("e_1") && b.has("e_2");
  if (diag) b.gen("e_3", 1, bits(td, {0, 1}), true, 2);
  // Orientation classes of projective factors.
  for (std::size_t s = 0; s < e.factors.size(); ++s) {
    const SpaceAtom& a = e.factors[s];
    if (a.kind != SpaceAtom::Kind::Proj) continue;
    std::vector<int> tw(td, 0);
    tw[*slot_pos(e, s)] = (a.param + 1) % 2;
    b.gen("R" + sfx(e, s), a.param, tw, false, 2);
  }

  for (const SpaceAtom& a : e.factors)
    if (a.kind == SpaceAtom::Kind::Mu && a.param % 2 == 0) {
      std::string u = "U" + sfx(e, &a - e.factors.data());
      b.rewrite(u, b.term(-2, {{u, 1}}));
    }
  if (diag)
    b.rewrite("e_3", PresBuilder::sum({b.term(1, {{"e_1", 2}}),
                                       b.term(1, {{"e_2", 2}})}));

  // Dead products.
  for (std::size_t s = 0; s < e.factors.size(); ++s) {
    std::string u = "U" + sfx(e, s);
    if (!b.has(u)) continue;
    for (const char* en : {"e_1", "e_2", "e_3", "e"})
      if (b.has(en)) b.rel(b.term(1, {{u, 1}, {en, 1}}));
  }
  for (std::size_t s = 0; s < e.factors.size(); ++s) {
    std::string r = "R" + sfx(e, s);
    if (!b.has(r)) continue;
    std::string es = "e" + sfx(e, s);
    b.rel(b.term(1, {{es, 1}, {r, 1}}));
  }
  // Orientation classes meet the other Euler classes through the diagonal.
  if (diag && b.has("R_1")) {
    int q = e.factors[0].param, r = e.factors[1].param;
    b.rel(PresBuilder::sum({b.term(1, {{"e_2", 1}, {"R_1", 1}}),
                            b.term(-1, {{"e_1", q}, {"e_3", 1}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"e_1", 1}, {"R_2", 1}}),
                            b.term(-1, {{"e_2", r}, {"e_3", 1}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"e_3", 1}, {"R_1", 1}}),
                            b.term(-1, {{"e_1", q}, {"e_2", 1}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"e_3", 1}, {"R_2", 1}}),
                            b.term(-1, {{"e_1", 1}, {"e_2", r}})}));
  }
  return b.build();
}

RingPresentation chow_witt_presentation(const SpaceExpr& e,
                                        const ScalarData& k, int bound) {
  require_supported(e);
  std::size_t td = e.twist_dim();
  PresBuilder b(k.gw, k.ideal_gw, td);
  const Vec h = k.h_gw;

  auto is_mu_even = [&](std::size_t s) {
    return e.factors[s].kind == SpaceAtom::Kind::Mu &&
           e.factors[s].param % 2 == 0;
  };
  auto is_mu_odd = [&](std::size_t s) {
    return e.factors[s].kind == SpaceAtom::Kind::Mu &&
           e.factors[s].param % 2 == 1;
  };

  for (std::size_t s = 0; s < e.factors.size(); ++s)
    if (is_mu_even(s)) b.gen("U" + sfx(e, s), 0, std::vector<int>(td, 0),
                             false, 2);
  // Hyperbolic degree-0 classes: one per twist coordinate, plus the
  // diagonal one on two-slot spaces.
  for (std::size_t s = 0; s < e.factors.size(); ++s)
    if (!is_mu_odd(s))
      b.gen("H" + sfx(e, s), 0, bits(td, {*slot_pos(e, s)}), true, 2);
  bool diag = b.has("H_1") && b.has("H_2");
  if (diag) b.gen("H_3", 0, bits(td, {0, 1}), true, 2);
  // Euler classes: twisted where the factor keeps its twist coordinate.
  for (std::size_t s = 0; s < e.factors.size(); ++s) {
    auto pos = slot_pos(e, s);
    std::vector<int> tw(td, 0);
    if (pos) tw[*pos] = 1;
    b.gen("e" + sfx(e, s), 1, tw, true, e_cap(e.factors[s], bound));
  }
  if (diag) b.gen("e_3", 1, bits(td, {0, 1}), true, 2);
  for (std::size_t s = 0; s < e.factors.size(); ++s) {
    const SpaceAtom& a = e.factors[s];
    if (a.kind != SpaceAtom::Kind::Proj) continue;
    std::vector<int> tw(td, 0);
    tw[*slot_pos(e, s)] = (a.param + 1) % 2;
    b.gen("R" + sfx(e, s), a.param, tw, false, 2);
  }

  // Rewrites: H^2 = 2h, U^2 = -2U, e_3^2 from the diagonal relation.
  for (const char* hn : {"H", "H_1", "H_2", "H_3"})
    if (b.has(hn)) b.rewrite(hn, b.term_vec(k.gw.scale(2, h), {}));
  for (const char* un : {"U", "U_1", "U_2"})
    if (b.has(un)) b.rewrite(un, b.term(-2, {{un, 1}}));
  if (diag)
    b.rewrite("e_3",
              PresBuilder::sum({b.term(1, {{"e_1", 2}}),
                                b.term(1, {{"e_2", 2}}),
                                b.term(1, {{"H_3", 1}, {"e_1", 1}, {"e_2", 1}})}));

  // Products of hyperbolic classes.
  if (diag) {
    b.rel(PresBuilder::sum(
        {b.term(1, {{"H_1", 1}, {"H_2", 1}}), b.term(-2, {{"H_3", 1}})}));
    b.rel(PresBuilder::sum(
        {b.term(1, {{"H_2", 1}, {"H_3", 1}}), b.term(-2, {{"H_1", 1}})}));
    b.rel(PresBuilder::sum(
        {b.term(1, {{"H_1", 1}, {"H_3", 1}}), b.term(-2, {{"H_2", 1}})}));
    // Hyperbolic classes against Euler classes.
    b.rel(PresBuilder::sum({b.term(2, {{"e_1", 1}}),
                            b.term(1, {{"H_3", 1}, {"e_2", 1}}),
                            b.term(-1, {{"H_2", 1}, {"e_3", 1}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"H_1", 1}, {"e_1", 1}}),
                            b.term(1, {{"H_2", 1}, {"e_2", 1}}),
                            b.term(-1, {{"H_3", 1}, {"e_3", 1}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"H_2", 1}, {"e_1", 1}}),
                            b.term(1, {{"H_1", 1}, {"e_2", 1}}),
                            b.term(-2, {{"e_3", 1}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"H_3", 1}, {"e_1", 1}}),
                            b.term(2, {{"e_2", 1}}),
                            b.term(-1, {{"H_1", 1}, {"e_3", 1}})}));
  }

  // Idempotent-type classes: h and every hyperbolic class kill them; their
  // products with Euler classes come from the localization step.
  for (std::size_t s = 0; s < e.factors.size(); ++s) {
    std::string u = "U" + sfx(e, s);
    if (!b.has(u)) continue;
    int n = e.factors[s].param;
    b.rel(b.term_vec(h, {{u, 1}}));
    for (const char* hn : {"H", "H_1", "H_2", "H_3"})
      if (b.has(hn)) b.rel(b.term(1, {{u, 1}, {hn, 1}}));
    std::string own_e = "e" + sfx(e, s);
    std::string other_e = e.factors.size() == 2
                              ? "e" + sfx(e, 1 - s)
                              : std::string();
    b.rel(PresBuilder::sum(
        {b.term(1, {{u, 1}, {own_e, 1}}), b.term(-n, {{own_e, 1}})}));
    if (!other_e.empty()) {
      std::string h3 = b.has("H_3") ? "H_3" : (b.has("H_1") ? "H_1" : "H_2");
      // With only one twist slot the diagonal hyperbolic class collapses
      // onto the surviving one.
      b.rel(PresBuilder::sum({b.term(1, {{u, 1}, {other_e, 1}}),
                              b.term(-n / 2, {{h3, 1}, {own_e, 1}})}));
    }
    if (b.has("e_3")) {
      std::string hs = "H" + sfx(e, 1 - s);
      b.rel(PresBuilder::sum({b.term(1, {{u, 1}, {"e_3", 1}}),
                              b.term(-n / 2, {{hs, 1}, {own_e, 1}})}));
    }
  }

  // Euler-class torsion from the finite factors.
  for (std::size_t s = 0; s < e.factors.size(); ++s) {
    if (e.factors[s].kind != SpaceAtom::Kind::Mu) continue;
    int n = e.factors[s].param;
    std::string es = "e" + sfx(e, s);
    if (n % 2 == 1) {
      b.rel(b.term(n, {{es, 1}}));
    } else {
      std::string hs = "H" + sfx(e, s);
      b.rel(b.term(n / 2, {{hs, 1}, {es, 1}}));
    }
  }

  // Orientation classes of projective factors.
  for (std::size_t s = 0; s < e.factors.size(); ++s) {
    const SpaceAtom& a = e.factors[s];
    if (a.kind != SpaceAtom::Kind::Proj) continue;
    std::string r = "R" + sfx(e, s), es = "e" + sfx(e, s),
                hs = "H" + sfx(e, s);
    int d = a.param;
    b.rel(b.term(1, {{es, 1}, {r, 1}}));
    b.rel(PresBuilder::sum(
        {b.term(1, {{hs, 1}, {r, 1}}), b.term(-2, {{es, d}})}));
    b.rel(PresBuilder::sum(
        {b.term_vec(h, {{r, 1}}), b.term(-1, {{hs, 1}, {es, d}})}));
  }
  if (diag && b.has("R_1")) {
    int q = e.factors[0].param, r = e.factors[1].param;
    b.rel(PresBuilder::sum({b.term(1, {{"e_1", q}, {"e_3", 1}}),
                            b.term(-1, {{"e_2", 1}, {"R_1", 1}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"e_2", r}, {"e_3", 1}}),
                            b.term(-1, {{"e_1", 1}, {"R_2", 1}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"e_3", 1}, {"R_1", 1}}),
                            b.term(-1, {{"e_1", q}, {"e_2", 1}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"e_3", 1}, {"R_2", 1}}),
                            b.term(-1, {{"e_1", 1}, {"e_2", r}})}));
    // Cross products with the other hyperbolic classes.
    b.rel(PresBuilder::sum({b.term(1, {{"H_2", 1}, {"R_1", 1}}),
                            b.term(-1, {{"H_3", 1}, {"e_1", q}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"H_3", 1}, {"R_1", 1}}),
                            b.term(-1, {{"H_2", 1}, {"e_1", q}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"H_1", 1}, {"R_2", 1}}),
                            b.term(-1, {{"H_3", 1}, {"e_2", r}})}));
    b.rel(PresBuilder::sum({b.term(1, {{"H_3", 1}, {"R_2", 1}}),
                            b.term(-1, {{"H_1", 1}, {"e_2", r}})}));
  }
  return b.build();
}

namespace {

std::string slot_suffix_of(const std::string& name) {
  auto p = name.find('_');
  return p == std::string::npos ? "" : name.substr(p);
}

// The Chow class a twisted generator projects to.
Poly chow_image(const RingPresentation& ch, const Generator& g) {
  std::string s = slot_suffix_of(g.name);
  char head = g.name[0];
  if (head == 'H') return ch.scalar_poly(Vec{2});
  if (head == 'U') return {};
  if (head == 'e') {
    if (s == "_3")
      return ch.add(ch.gen_poly("c_1"), ch.gen_poly("c_2"));
    return ch.gen_poly("c" + s);
  }
  if (head == 'R') return ch.gen_poly("c" + s, g.degree);
  throw std::logic_error("unexpected generator " + g.name);
}

}  // namespace

SpaceTheories build_space(const SpaceExpr& e, const FieldModel& f, int bound) {
  require_supported(e);
  SpaceTheories st;
  st.expr = e;
  st.field = f;
  st.bound = bound;
  TheoryStack& s = st.stack;
  s.k = make_scalar_data(f);

  s.ch = chow_presentation(e, bound);
  s.ch2 = chow_mod2_presentation(e, bound);
  s.hI = icoh_presentation(e, s.k, bound);
  s.cw = chow_witt_presentation(e, s.k, bound);

  // ch -> ch2: identity on generator names.
  s.mod2.images.clear();
  for (const Generator& g : s.ch.gens())
    s.mod2.images.push_back(s.ch2.gen_poly(g.name));
  s.mod2.scalar_map = Mat{{1}};

  // hI -> ch2: Euler classes to Chern classes, idempotents and the free
  // orientation classes through their Chow images.
  s.rho.images.clear();
  for (const Generator& g : s.hI.gens()) {
    if (g.name[0] == 'U') {
      s.rho.images.push_back({});
      continue;
    }
    std::string suff = slot_suffix_of(g.name);
    if (g.name[0] == 'e' && suff == "_3")
      s.rho.images.push_back(
          s.ch2.add(s.ch2.gen_poly("c_1"), s.ch2.gen_poly("c_2")));
    else
      s.rho.images.push_back(
          s.ch2.gen_poly("c" + suff, g.name[0] == 'R' ? g.degree : 1));
  }
  s.rho.scalar_map = s.k.w_rank2_matrix;

  // cw -> hI and cw -> ch.
  s.cw_hI.images.clear();
  s.cw_ch.images.clear();
  for (const Generator& g : s.cw.gens()) {
    // Hyperbolic classes die in I-cohomology, as do the Euler classes of
    // odd-order finite factors (their twist collapses there).
    if (g.name[0] == 'H' || !s.hI.gen_index(g.name))
      s.cw_hI.images.push_back({});
    else
      s.cw_hI.images.push_back(s.hI.gen_poly(g.name));
    s.cw_ch.images.push_back(chow_image(s.ch, g));
  }
  s.cw_hI.scalar_map = s.k.gw_to_w_matrix;
  s.cw_ch.scalar_map = s.k.rank_matrix;

  // Lift of each Chern class (zero where the mod-2 class already dies).
  s.ch_lift_hI.clear();
  for (const Generator& g : s.ch.gens()) {
    std::string en = "e" + slot_suffix_of(g.name);
    if (s.hI.gen_index(en))
      s.ch_lift_hI.push_back(s.hI.gen_poly(en));
    else
      s.ch_lift_hI.push_back({});
  }

  // Euler and hyperbolic classes per nonzero twist.
  s.twist_euler.clear();
  st.twist_hyperbolic.clear();
  std::size_t td = e.twist_dim();
  for (std::size_t mask = 1; mask < (std::size_t{1} << td); ++mask) {
    std::vector<int> tb(td, 0);
    for (std::size_t i = 0; i < td; ++i) tb[i] = (mask >> i) & 1;
    for (const Generator& g : s.hI.gens())
      if (g.name[0] == 'e' && g.twist.bits == tb)
        s.twist_euler[tb] = s.hI.gen_poly(g.name);
    for (const Generator& g : s.cw.gens())
      if (g.name[0] == 'H' && g.twist.bits == tb)
        st.twist_hyperbolic[tb] = s.cw.gen_poly(g.name);
  }

  st.log.push_back("space " + e.str() + " over " + f.name() +
                   ", degrees reliable through " + std::to_string(bound));
  return st;
}

std::optional<QuotientStep> quotient_step(const SpaceExpr& e,
                                          const ScalarData& k, int bound) {
  if (!e.has_mu()) return std::nullopt;
  QuotientStep step;
  // Cut down the first finite factor; its parent has the full torus there.
  std::size_t s = 0;
  while (e.factors[s].kind != SpaceAtom::Kind::Mu) ++s;
  step.slot = s;
  step.n = e.factors[s].param;
  step.parent = e;
  step.parent.factors[s] = {SpaceAtom::Kind::Gm, 0};

  RingPresentation parent_cw = chow_witt_presentation(step.parent, k, bound);
  RingPresentation cand_cw = chow_witt_presentation(e, k, bound);

  std::size_t ppos = *slot_pos(step.parent, s);
  std::string esn = "e" + sfx(step.parent, s);
  std::string hsn = "H" + sfx(step.parent, s);
  bool odd = step.n % 2 == 1;

  // Euler class of O(n) on the cut slot.
  if (odd)
    step.euler = parent_cw.scale(k.gw.scale(-step.n, k.gw.one),
                                 parent_cw.gen_poly(esn));
  else
    step.euler = parent_cw.scale(
        k.gw.scale(-step.n / 2, k.gw.one),
        parent_cw.multiply(parent_cw.gen_poly(hsn), parent_cw.gen_poly(esn)));
  step.euler_twist = Twist::trivial(step.parent.twist_dim());
  if (odd) step.euler_twist.bits[ppos] = 1;

  if (odd) step.collapsed_slot = ppos;

  // Generator images under restriction to the quotient.
  std::string other_h;
  if (e.factors.size() == 2) {
    std::string hother = "H" + sfx(e, 1 - s);
    other_h = cand_cw.gen_index(hother) ? hother : "";
  }
  for (const Generator& g : parent_cw.gens()) {
    if (!odd) {
      step.sigma.images.push_back(cand_cw.gen_poly(g.name));
      continue;
    }
    if (g.name == hsn) {
      step.sigma.images.push_back(cand_cw.scalar_poly(k.h_gw));
    } else if (g.name == "H_3") {
      step.sigma.images.push_back(cand_cw.gen_poly(other_h));
    } else if (g.name == "e_3") {
      // e_3 restricts to the surviving Euler class corrected by the
      // square-periodicity identification of the collapsed twist.
      std::string eother = "e" + sfx(e, 1 - s);
      Poly corr = cand_cw.scale(
          k.gw.scale((step.n + 1) / 2, k.gw.one),
          cand_cw.multiply(cand_cw.gen_poly(other_h), cand_cw.gen_poly(esn)));
      step.sigma.images.push_back(cand_cw.add(cand_cw.gen_poly(eother), corr));
    } else {
      step.sigma.images.push_back(cand_cw.gen_poly(g.name));
    }
  }

  if (!odd) {
    // New idempotent tail at (0, trivial): U_s times every surviving
    // degree-0 idempotent monomial of the parent.
    std::string un = "U" + sfx(e, s);
    step.tail_images.push_back(cand_cw.gen_poly(un));
    for (std::size_t t = 0; t < e.factors.size(); ++t) {
      if (t == s) continue;
      std::string ut = "U" + sfx(e, t);
      if (cand_cw.gen_index(ut))
        step.tail_images.push_back(
            cand_cw.multiply(cand_cw.gen_poly(un), cand_cw.gen_poly(ut)));
    }
  }
  return step;
}

SpaceTheories build_space(const std::string& expr, const std::string& field,
                          int bound) {
  return build_space(SpaceExpr::parse(expr), FieldModel::parse(field), bound);
}

}  // namespace cw
