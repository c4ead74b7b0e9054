#include "cw/graded.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace cw {

Twist Twist::operator+(const Twist& o) const {
  if (bits.size() != o.bits.size())
    throw std::invalid_argument("twist dimension mismatch");
  Twist t = *this;
  for (std::size_t i = 0; i < bits.size(); ++i) t.bits[i] = (t.bits[i] + o.bits[i]) & 1;
  return t;
}

bool Twist::is_trivial() const {
  for (int b : bits)
    if (b) return false;
  return true;
}

std::string Twist::str() const {
  std::string s = "O(";
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(bits[i]);
  }
  return s + ")";
}

RingPresentation::RingPresentation(ScalarRing scalar,
                                   std::vector<Vec> scalar_ideal,
                                   std::vector<Generator> gens,
                                   std::vector<Poly> relations,
                                   std::size_t twist_dim)
    : scalar_(std::move(scalar)), scalar_ideal_(std::move(scalar_ideal)),
      gens_(std::move(gens)), relations_(std::move(relations)),
      twist_dim_(twist_dim) {
  for (const Generator& g : gens_) {
    if (g.twist.dim() != twist_dim_)
      throw std::invalid_argument("generator twist has wrong dimension: " + g.name);
    if (g.degree == 0 && g.power_cap < 0)
      throw std::invalid_argument("degree-0 generator needs a power cap: " + g.name);
  }
  for (const Poly& rel : relations_) {
    if (rel.empty()) continue;
    int d = mono_degree(rel.begin()->first);
    Twist t = mono_twist(rel.begin()->first);
    for (const auto& [e, c] : rel) {
      if (mono_degree(e) != d || !(mono_twist(e) == t))
        throw std::invalid_argument("inhomogeneous relation");
    }
  }
}

std::optional<std::size_t> RingPresentation::gen_index(
    const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

int RingPresentation::mono_degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * gens_[i].degree;
  return d;
}

Twist RingPresentation::mono_twist(const Exponents& e) const {
  Twist t = Twist::trivial(twist_dim_);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] % 2 == 1) t = t + gens_[i].twist;
  return t;
}

Poly RingPresentation::normalize(const Poly& p) const {
  Poly out;
  std::vector<std::pair<Exponents, Vec>> work(p.begin(), p.end());
  int guard = 0;
  while (!work.empty()) {
    if (++guard > 1000000) throw std::logic_error("rewriting did not terminate");
    auto [e, c] = work.back();
    work.pop_back();
    bool all_zero = true;
    for (const Int& x : c)
      if (x != 0) all_zero = false;
    if (all_zero) continue;
    std::size_t hit = gens_.size();
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].power_cap >= 0 && e[i] >= gens_[i].power_cap) {
        hit = i;
        break;
      }
    if (hit == gens_.size()) {
      Vec& slot = out.try_emplace(e, Vec(scalar_.group.n_gens())).first->second;
      for (std::size_t k = 0; k < slot.size(); ++k) slot[k] += c[k];
      continue;
    }
    Exponents base = e;
    base[hit] -= gens_[hit].power_cap;
    for (const auto& [re, rc] : gens_[hit].rewrite) {
      Exponents ne = base;
      for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += re[i];
      work.emplace_back(ne, scalar_.multiply(c, rc));
    }
  }
  // Drop exact zeros for a canonical form.
  for (auto it = out.begin(); it != out.end();) {
    bool z = true;
    for (const Int& x : it->second)
      if (x != 0) z = false;
    it = z ? out.erase(it) : std::next(it);
  }
  return out;
}

Poly RingPresentation::multiply(const Poly& a, const Poly& b) const {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      Vec c = scalar_.multiply(ca, cb);
      Vec& slot = out.try_emplace(e, Vec(scalar_.group.n_gens())).first->second;
      for (std::size_t k = 0; k < slot.size(); ++k) slot[k] += c[k];
    }
  return normalize(out);
}

Poly RingPresentation::scale(const Vec& s, const Poly& p) const {
  Poly out;
  for (const auto& [e, c] : p) out[e] = scalar_.multiply(s, c);
  return normalize(out);
}

Poly RingPresentation::add(const Poly& a, const Poly& b) const {
  Poly out = a;
  for (const auto& [e, c] : b) {
    Vec& slot = out.try_emplace(e, Vec(scalar_.group.n_gens())).first->second;
    for (std::size_t k = 0; k < slot.size(); ++k) slot[k] += c[k];
  }
  return normalize(out);
}

Poly RingPresentation::gen_poly(const std::string& name, int power) const {
  auto i = gen_index(name);
  if (!i) throw std::invalid_argument("no generator named " + name);
  Exponents e(gens_.size(), 0);
  e[*i] = power;
  Poly p;
  p[e] = scalar_.one;
  return normalize(p);
}

Poly RingPresentation::scalar_poly(const Vec& coords) const {
  Poly p;
  p[Exponents(gens_.size(), 0)] = coords;
  return normalize(p);
}

RingPresentation RingPresentation::with_extra_relations(
    std::vector<Poly> extra) const {
  std::vector<Poly> rels = relations_;
  for (Poly& p : extra) rels.push_back(std::move(p));
  return RingPresentation(scalar_, scalar_ideal_, gens_, rels, twist_dim_);
}

namespace {

void enumerate_rec(const RingPresentation& r, int degree, const Twist& t,
                   std::size_t i, Exponents& e,
                   std::vector<Exponents>& out) {
  if (degree < 0) return;
  if (i == r.gens().size()) {
    if (degree == 0 && r.mono_twist(e) == t) out.push_back(e);
    return;
  }
  const Generator& g = r.gens()[i];
  int max_pow;
  if (g.power_cap >= 0)
    max_pow = g.power_cap - 1;
  else
    max_pow = g.degree > 0 ? degree / g.degree : 0;
  if (g.power_cap >= 0 && g.degree > 0)
    max_pow = std::min(max_pow, degree / g.degree);
  for (int p = 0; p <= max_pow; ++p) {
    e[i] = p;
    enumerate_rec(r, degree - p * g.degree, t, i + 1, e, out);
  }
  e[i] = 0;
}

std::vector<Exponents> enumerate_monomials(const RingPresentation& r,
                                           int degree, const Twist& t) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents e(r.gens().size(), 0);
  enumerate_rec(r, degree, t, 0, e, out);
  return out;
}

bool poly_is_zero(const Poly& p) {
  for (const auto& [e, c] : p)
    for (const Int& x : c)
      if (x != 0) return false;
  return true;
}

}  // namespace

Vec Realization::coords(const Poly& p) const {
  Vec v(monomials.size() * scalar_width);
  for (const auto& [e, c] : p) {
    bool zero = true;
    for (const Int& x : c)
      if (x != 0) zero = false;
    if (zero) continue;
    auto it = index.find(e);
    if (it == index.end())
      throw std::invalid_argument("polynomial does not live in this bidegree");
    for (std::size_t k = 0; k < scalar_width; ++k)
      v[it->second * scalar_width + k] += c[k];
  }
  return v;
}

Realization realize(const RingPresentation& r, int degree, const Twist& t) {
  Realization out;
  out.monomials = enumerate_monomials(r, degree, t);
  out.scalar_width = r.scalar().group.n_gens();
  for (std::size_t i = 0; i < out.monomials.size(); ++i)
    out.index[out.monomials[i]] = i;

  const std::size_t w = out.scalar_width;
  const std::size_t n = out.monomials.size() * w;
  RowReducer rows(n);

  // Scalar-ring relations in every slot.
  const Mat& srel = r.scalar().group.relations();
  for (std::size_t m = 0; m < out.monomials.size(); ++m)
    for (std::size_t i = 0; i < srel.rows(); ++i) {
      Vec row(n);
      for (std::size_t j = 0; j < w; ++j) row[m * w + j] = srel(i, j);
      rows.add(std::move(row));
    }

  // Ideal annihilation: I * m = 0 for monomials containing a killed
  // generator.
  for (std::size_t m = 0; m < out.monomials.size(); ++m) {
    bool killed = false;
    for (std::size_t i = 0; i < r.gens().size(); ++i)
      if (out.monomials[m][i] > 0 && r.gens()[i].ideal_kills) killed = true;
    if (!killed) continue;
    for (const Vec& v : r.scalar_ideal()) {
      Vec row(n);
      for (std::size_t j = 0; j < w; ++j) row[m * w + j] = v[j];
      rows.add(std::move(row));
    }
  }

  // Explicit relations times every complementary monomial and scalar basis
  // element.
  for (const Poly& rel : r.relations()) {
    if (rel.empty()) continue;
    int dr = r.mono_degree(rel.begin()->first);
    Twist tr = r.mono_twist(rel.begin()->first);
    if (dr > degree) continue;
    Twist tc = t + tr;  // complementary twist (self-inverse in Pic/2)
    for (const Exponents& comp : enumerate_monomials(r, degree - dr, tc)) {
      Poly cp;
      cp[comp] = r.scalar().one;
      Poly prod = r.multiply(cp, rel);
      for (std::size_t s = 0; s < w; ++s) {
        Vec es(w);
        es[s] = 1;
        Poly scaled = r.scale(es, prod);
        if (poly_is_zero(scaled)) continue;
        rows.add(out.coords(scaled));
      }
    }
  }

  out.group = AbGroup(n, rows.matrix());
  return out;
}

std::string verdict_name(MapVerdict v) {
  switch (v) {
    case MapVerdict::Iso: return "iso";
    case MapVerdict::InjectiveOnly: return "injective-not-surjective";
    case MapVerdict::SurjectiveOnly: return "surjective-not-injective";
    case MapVerdict::Neither: return "neither";
  }
  return "?";
}

Poly apply_gen_map(const RingPresentation& a, const RingPresentation& b,
                   const GenMap& gm, const Poly& p) {
  Poly out;
  for (const auto& [e, c] : p) {
    Poly term = b.scalar_poly(gm.scalar_map ? *gm.scalar_map * c : c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = b.multiply(term, gm.images[i]);
    out = b.add(out, term);
  }
  return out;
}

Hom induced_hom(const RingPresentation& a, const Realization& ra,
                const RingPresentation& b, const Realization& rb,
                const GenMap& map) {
  std::size_t wa = ra.scalar_width;
  Mat m(rb.group.n_gens(), ra.group.n_gens());
  for (std::size_t mi = 0; mi < ra.monomials.size(); ++mi)
    for (std::size_t s = 0; s < wa; ++s) {
      Vec es(wa);
      es[s] = 1;
      Poly p;
      p[ra.monomials[mi]] = es;
      Vec img = rb.coords(apply_gen_map(a, b, map, p));
      for (std::size_t i = 0; i < img.size(); ++i)
        m(i, mi * wa + s) = img[i];
    }
  return Hom(ra.group, rb.group, std::move(m));
}

Hom multiplication_hom(const RingPresentation& r, const Realization& from,
                       const Realization& to, const Poly& factor) {
  std::size_t w = from.scalar_width;
  Mat m(to.group.n_gens(), from.group.n_gens());
  for (std::size_t mi = 0; mi < from.monomials.size(); ++mi)
    for (std::size_t s = 0; s < w; ++s) {
      Vec es(w);
      es[s] = 1;
      Poly p;
      p[from.monomials[mi]] = es;
      Vec img = to.coords(r.multiply(p, factor));
      for (std::size_t i = 0; i < img.size(); ++i) m(i, mi * w + s) = img[i];
    }
  return Hom(from.group, to.group, std::move(m));
}

MapVerdict classify_hom(const Hom& h) {
  // The kernel is trivial iff every generator of the preimage of the target
  // relation lattice is already zero in the source; testing the columns
  // directly avoids presenting the kernel, whose relation lattice tends to
  // have huge entries.
  Mat p = preimage_lattice(h.matrix(), h.target().relations());
  bool inj = true;
  for (std::size_t j = 0; j < p.cols() && inj; ++j) {
    Vec col(p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i) col[i] = p(i, j);
    inj = h.source().is_zero_element(col);
  }
  bool surj = cokernel(h).group.is_trivial();
  if (inj && surj) return MapVerdict::Iso;
  if (inj) return MapVerdict::InjectiveOnly;
  if (surj) return MapVerdict::SurjectiveOnly;
  return MapVerdict::Neither;
}

bool ComparisonResult::all_iso() const {
  if (!relations_preserved) return false;
  for (const auto& r : reports)
    if (r.verdict != MapVerdict::Iso) return false;
  return true;
}

ComparisonResult compare_presentations(const RingPresentation& a,
                                       const RingPresentation& b,
                                       const GenMap& map, int max_degree) {
  if (a.twist_dim() != b.twist_dim())
    throw std::invalid_argument("twist dimension mismatch");
  ComparisonResult res;

  for (const Poly& rel : a.relations()) {
    Poly img = apply_gen_map(a, b, map, rel);
    if (img.empty()) continue;
    int d = b.mono_degree(img.begin()->first);
    Twist t = b.mono_twist(img.begin()->first);
    Realization rb = realize(b, d, t);
    if (!rb.group.is_zero_element(rb.coords(img)))
      res.relations_preserved = false;
  }

  std::size_t ntw = std::size_t{1} << a.twist_dim();
  for (int d = 0; d <= max_degree; ++d)
    for (std::size_t tb = 0; tb < ntw; ++tb) {
      Twist t = Twist::trivial(a.twist_dim());
      for (std::size_t i = 0; i < a.twist_dim(); ++i) t.bits[i] = (tb >> i) & 1;
      Realization ra = realize(a, d, t);
      Realization rb = realize(b, d, t);
      Hom h = induced_hom(a, ra, b, rb, map);
      res.reports.push_back({d, t, ra.group.describe(), rb.group.describe(),
                             classify_hom(h)});
    }
  return res;
}

RingPresentation tensor_product(const RingPresentation& a,
                                const RingPresentation& b) {
  std::size_t td = a.twist_dim() + b.twist_dim();
  std::vector<Generator> gens;
  auto lift_twist_a = [&](const Twist& t) {
    Twist nt = Twist::trivial(td);
    for (std::size_t i = 0; i < t.dim(); ++i) nt.bits[i] = t.bits[i];
    return nt;
  };
  auto lift_twist_b = [&](const Twist& t) {
    Twist nt = Twist::trivial(td);
    for (std::size_t i = 0; i < t.dim(); ++i) nt.bits[a.twist_dim() + i] = t.bits[i];
    return nt;
  };
  std::size_t na = a.gens().size();
  auto lift_poly = [&](const Poly& p, bool from_a) {
    Poly out;
    for (const auto& [e, c] : p) {
      Exponents ne(na + b.gens().size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        ne[from_a ? i : na + i] = e[i];
      out[ne] = c;
    }
    return out;
  };
  for (const Generator& g : a.gens()) {
    Generator ng = g;
    ng.twist = lift_twist_a(g.twist);
    ng.rewrite = lift_poly(g.rewrite, true);
    gens.push_back(ng);
  }
  for (const Generator& g : b.gens()) {
    Generator ng = g;
    ng.twist = lift_twist_b(g.twist);
    ng.rewrite = lift_poly(g.rewrite, false);
    gens.push_back(ng);
  }
  std::vector<Poly> rels;
  for (const Poly& p : a.relations()) rels.push_back(lift_poly(p, true));
  for (const Poly& p : b.relations()) rels.push_back(lift_poly(p, false));
  return RingPresentation(a.scalar(), a.scalar_ideal(), gens, rels, td);
}

std::string poly_str(const RingPresentation& r, const Poly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p) {
    if (!first) os << " + ";
    first = false;
    os << "(";
    bool fc = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      if (!fc) os << "+";
      fc = false;
      os << c[i] << "*" << r.scalar().basis[i];
    }
    if (fc) os << "0";
    os << ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << r.gens()[i].name;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::string RingPresentation::describe() const {
  std::ostringstream os;
  os << "generators:\n";
  for (const Generator& g : gens_) {
    os << "  " << g.name << "  degree " << g.degree << "  twist "
       << g.twist.str();
    if (g.ideal_kills) os << "  (killed by I)";
    if (g.power_cap >= 0)
      os << "  " << g.name << "^" << g.power_cap << " = "
         << poly_str(*this, g.rewrite);
    os << "\n";
  }
  os << "relations:\n";
  for (const Poly& p : relations_) os << "  " << poly_str(*this, p) << " = 0\n";
  return os.str();
}

namespace {
using nlohmann::json;

json poly_to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [e, c] : p) {
    json coef = json::array();
    for (const Int& x : c) coef.push_back(x.str());
    out.push_back({{"exps", e}, {"coef", coef}});
  }
  return out;
}

Poly poly_from_json(const json& j) {
  Poly p;
  for (const auto& t : j) {
    Exponents e = t.at("exps").get<Exponents>();
    Vec c;
    for (const auto& s : t.at("coef")) c.push_back(Int(s.get<std::string>()));
    p[e] = c;
  }
  return p;
}
}  // namespace

std::string to_json(const RingPresentation& r) {
  json j;
  j["twist_dim"] = r.twist_dim();
  j["gens"] = json::array();
  for (const Generator& g : r.gens()) {
    j["gens"].push_back({{"name", g.name},
                         {"degree", g.degree},
                         {"twist", g.twist.bits},
                         {"ideal_kills", g.ideal_kills},
                         {"power_cap", g.power_cap},
                         {"rewrite", poly_to_json(g.rewrite)}});
  }
  j["relations"] = json::array();
  for (const Poly& p : r.relations()) j["relations"].push_back(poly_to_json(p));
  return j.dump(2);
}

RingPresentation from_json(const std::string& text, const ScalarRing& scalar,
                           const std::vector<Vec>& scalar_ideal) {
  json j = json::parse(text);
  std::vector<Generator> gens;
  for (const auto& g : j.at("gens")) {
    Generator ng;
    ng.name = g.at("name").get<std::string>();
    ng.degree = g.at("degree").get<int>();
    ng.twist.bits = g.at("twist").get<std::vector<int>>();
    ng.ideal_kills = g.at("ideal_kills").get<bool>();
    ng.power_cap = g.at("power_cap").get<int>();
    ng.rewrite = poly_from_json(g.at("rewrite"));
    gens.push_back(ng);
  }
  std::vector<Poly> rels;
  for (const auto& p : j.at("relations")) rels.push_back(poly_from_json(p));
  return RingPresentation(scalar, scalar_ideal, gens, rels,
                          j.at("twist_dim").get<std::size_t>());
}

}  // namespace cw
