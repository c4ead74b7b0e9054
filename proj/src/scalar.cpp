#include "cw/scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cw {

FieldModel FieldModel::parse(const std::string& name) {
  if (name == "C") return {FieldKind::QuadClosed, 0};
  if (name == "R") return {FieldKind::RealClosed, 0};
  if (name.size() >= 2 && name[0] == 'F') {
    int q = std::stoi(name.substr(1));
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("need an odd q: " + name);
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0)
        throw std::invalid_argument("only prime q is supported: " + name);
    return {FieldKind::FiniteOdd, q};
  }
  throw std::invalid_argument("unknown field: " + name);
}

std::string FieldModel::name() const {
  switch (kind) {
    case FieldKind::QuadClosed: return "C";
    case FieldKind::RealClosed: return "R";
    case FieldKind::FiniteOdd: return "F" + std::to_string(q);
  }
  return "?";
}

Vec ScalarRing::multiply(const Vec& x, const Vec& y) const {
  Vec out(group.n_gens());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      const Vec& b = mul[i][j];
      for (std::size_t k = 0; k < out.size(); ++k)
        out[k] += x[i] * y[j] * b[k];
    }
  }
  return out;
}

Vec ScalarRing::scale(const Int& c, const Vec& x) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

namespace {

// Square class of x in F_q: 0 for squares, 1 for nonsquares.
int square_class(int x, int q, const std::set<int>& squares) {
  x %= q;
  if (x < 0) x += q;
  if (x == 0) throw std::logic_error("square class of zero");
  return squares.count(x) ? 0 : 1;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

WittClassification classify_witt_finite(int q) {
  std::set<int> squares;
  for (int x = 1; x < q; ++x) squares.insert(x * x % q);
  int a = 0;
  for (int x = 1; x < q; ++x)
    if (!squares.count(x)) {
      a = x;
      break;
    }
  if (a == 0) throw std::logic_error("no nonsquare found");
  auto cls = [&](int x) { return square_class(x, q, squares); };
  int rep[2] = {1, a};

  // For a binary form with entry classes (x, y), every chain-equivalence move
  // replaces it by (z, xyz) with z a represented value. Collect the square
  // classes z can take.
  auto binary_moves = [&](int x, int y) {
    std::set<int> zs;
    for (int u = 0; u < q; ++u)
      for (int v = 0; v < q; ++v) {
        if (u == 0 && v == 0) continue;
        int z = (rep[x] * u % q * u + rep[y] * v % q * v) % q;
        if (z != 0) zs.insert(cls(z));
      }
    return zs;
  };
  std::set<int> moves[2][2];
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) moves[x][y] = binary_moves(x, y);

  // State for a fixed dimension d: the number of nonsquare entries, 0..d.
  // Close under replacing a pair (x, y) by (z, class(x*y*z)).
  const int max_dim = 16;  // large enough for the relation search box below
  std::vector<std::vector<int>> cls_of(max_dim + 1);  // dim -> na -> class id
  for (int d = 0; d <= max_dim; ++d) {
    UnionFind uf(d + 1);
    for (int na = 0; na <= d; ++na) {
      int n1 = d - na;
      auto try_pair = [&](int x, int y) {
        for (int z : moves[x][y]) {
          int w = cls(rep[x] * rep[y] % q * rep[z]);
          int na2 = na - x - y + z + w;
          uf.unite(na, na2);
        }
      };
      if (n1 >= 2) try_pair(0, 0);
      if (n1 >= 1 && na >= 1) try_pair(0, 1);
      if (na >= 2) try_pair(1, 1);
    }
    cls_of[d].resize(d + 1);
    for (int na = 0; na <= d; ++na) cls_of[d][na] = uf.find(na);
  }

  int cm1 = cls(q - 1);  // class of -1
  // Hyperbolic plane <1, -1> as counts (n1, na).
  int hyp_na = cm1;

  // Witt-trivial: even dimension and chain equivalent to d/2 hyperbolics.
  auto witt_zero = [&](int n1, int na) {
    int d = n1 + na;
    if (d % 2 != 0) return false;
    if (d == 0) return true;
    int hyp_total_na = (d / 2) * hyp_na;
    return cls_of[d][na] == cls_of[d][hyp_total_na];
  };

  // Relations among [<1>] and [<a>] in the Witt group: (x1 - y1, xa - ya)
  // whenever the forms (x1, xa) and (y1, ya) are Witt equivalent, which we
  // test via x (+) -y being Witt-trivial.
  auto witt_equal = [&](int x1, int xa, int y1, int ya) {
    // -<1> has class cm1; -<a> has class of -a.
    int neg_a_cls = cls(q - a);
    int n1 = x1 + (cm1 == 0 ? y1 : 0) + (neg_a_cls == 0 ? ya : 0);
    int na = xa + (cm1 == 1 ? y1 : 0) + (neg_a_cls == 1 ? ya : 0);
    return witt_zero(n1, na);
  };

  std::vector<Vec> rels;
  const int box = 4;
  for (int x1 = 0; x1 <= box; ++x1)
    for (int xa = 0; xa <= box; ++xa)
      for (int y1 = 0; y1 <= box; ++y1)
        for (int ya = 0; ya <= box; ++ya)
          if (witt_equal(x1, xa, y1, ya))
            rels.push_back(Vec{Int(x1 - y1), Int(xa - ya)});

  Mat rel(rels.size(), 2);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    rel(i, 0) = rels[i][0];
    rel(i, 1) = rels[i][1];
  }

  WittClassification out;
  out.q = q;
  out.nonsquare = a;
  out.minus_one_square = (cm1 == 0);
  out.witt = AbGroup(2, rel);
  out.minus_one = cm1 == 0 ? Vec{1, 0} : Vec{0, 1};
  return out;
}

namespace {

std::vector<Vec> subgroup_product(const ScalarRing& ring,
                                  const std::vector<Vec>& gens_a,
                                  const std::vector<Vec>& gens_b) {
  std::vector<Vec> out;
  for (const Vec& x : gens_a)
    for (const Vec& y : gens_b) out.push_back(ring.multiply(x, y));
  return out;
}

ScalarData scalar_quad_closed() {
  ScalarData d;
  d.field = {FieldKind::QuadClosed, 0};
  // Every unit is a square, so GW = Z via rank and W = Z/2.
  d.gw = {AbGroup::free_group(1), {"<1>"}, Vec{1}, {{Vec{1}}}};
  d.w = {AbGroup::cyclic(2), {"<1>"}, Vec{1}, {{Vec{1}}}};
  d.h_gw = Vec{2};
  d.h_w = Vec{0};
  d.rank_matrix = Mat{{1}};
  d.gw_to_w_matrix = Mat{{1}};
  d.w_rank2_matrix = Mat{{1}};
  d.ideal_gw = {};
  return d;
}

ScalarData scalar_real_closed() {
  ScalarData d;
  d.field = {FieldKind::RealClosed, 0};
  // Square classes {1, -1}; no isotropic relations beyond <-1>^2 = <1>.
  AbGroup z2free = AbGroup::free_group(2);
  d.gw = {z2free,
          {"<1>", "<-1>"},
          Vec{1, 0},
          {{Vec{1, 0}, Vec{0, 1}}, {Vec{0, 1}, Vec{1, 0}}}};
  // Witt ring via signature: <1> -> 1, <-1> -> -1.
  d.w = {AbGroup::free_group(1), {"<1>"}, Vec{1}, {{Vec{1}}}};
  d.h_gw = Vec{1, 1};
  d.h_w = Vec{0};
  d.rank_matrix = Mat{{1, 1}};
  d.gw_to_w_matrix = Mat{{1, -1}};
  d.w_rank2_matrix = Mat{{1}};
  d.ideal_gw = {Vec{-1, 1}};  // <-1> - <1>, rank zero
  return d;
}

ScalarData scalar_finite(int q) {
  WittClassification wc = classify_witt_finite(q);
  ScalarData d;
  d.field = {FieldKind::FiniteOdd, q};

  // Basis <1>, <a> for both rings; <a>^2 = <a^2> = <1>.
  std::vector<std::vector<Vec>> table{{Vec{1, 0}, Vec{0, 1}},
                                      {Vec{0, 1}, Vec{1, 0}}};
  d.w = {wc.witt, {"<1>", "<a>"}, Vec{1, 0}, table};

  // h = <1> + <-1>.
  d.h_gw = Vec{1, 0};
  d.h_gw[0] += wc.minus_one[0];
  d.h_gw[1] += wc.minus_one[1];
  d.h_w = Vec{0, 0};  // set below once gw_to_w is known

  // GW relations: rank zero and Witt class zero.
  // rank: (x, y) -> x + y; witt: coordinates are shared.
  Mat cond = Mat{{1, 1}}.vstack(Mat::identity(2));
  // Lattice in the target Z (+) W: relations of W shifted into coords 1..2.
  Mat lat(wc.witt.relations().rows(), 3);
  for (std::size_t i = 0; i < wc.witt.relations().rows(); ++i) {
    lat(i, 1) = wc.witt.relations()(i, 0);
    lat(i, 2) = wc.witt.relations()(i, 1);
  }
  Mat pre = preimage_lattice(cond, lat);
  d.gw = {AbGroup(2, pre.transpose()), {"<1>", "<a>"}, Vec{1, 0}, table};

  d.rank_matrix = Mat{{1, 1}};
  d.gw_to_w_matrix = Mat::identity(2);
  d.w_rank2_matrix = Mat{{1, 1}};
  d.ideal_gw = {Vec{-1, 1}};  // <a> - <1>

  // h must be rank 2 and Witt trivial.
  Vec hw = d.gw_to_w_matrix * d.h_gw;
  if (!d.w.group.is_zero_element(hw))
    throw std::logic_error("hyperbolic form not Witt trivial");
  d.h_w = Vec{0, 0};
  return d;
}

}  // namespace

std::vector<Vec> ScalarData::ideal_power_w(int j) const {
  std::size_t n = w.group.n_gens();
  if (j <= 0) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = 1;
      all.push_back(e);
    }
    return all;
  }
  // I inside W: image of the rank-zero ideal of GW.
  std::vector<Vec> gens;
  for (const Vec& g : ideal_gw) gens.push_back(gw_to_w_matrix * g);
  std::vector<Vec> power = gens;
  for (int i = 1; i < j; ++i) power = subgroup_product(w, power, gens);
  return power;
}

int ScalarData::ibar_order2(int j) const {
  // Order of I^j / I^(j+1).
  std::vector<Vec> pj = ideal_power_w(j);
  std::vector<Vec> pj1 = ideal_power_w(j + 1);
  // Subgroup generated by pj modulo (relations + pj1).
  std::vector<Vec> denom = pj1;
  AbGroup q = quotient_by(w.group, denom).group;
  // Index of the image of pj in that quotient equals |quotient| / |sub|;
  // we want |sub| itself: |I^j/I^(j+1)| = [denom+pj : denom].
  std::vector<Vec> both = pj;
  both.insert(both.end(), pj1.begin(), pj1.end());
  Int idx_with = subgroup_index(w.group, both);
  Int idx_without = subgroup_index(w.group, denom);
  if (idx_with == 0 || idx_without == 0) {
    // Infinite index cases (real closed fields): compare directly.
    // I^j/I^(j+1) there is generated by one coset of order dividing 2.
    for (const Vec& g : pj) {
      Vec doubled = w.scale(2, g);
      bool in_next = express(w.group, pj1, doubled).has_value();
      bool self_in_next = express(w.group, pj1, g).has_value();
      if (!self_in_next && in_next) return 1;
    }
    return 0;
  }
  Int order = idx_without / idx_with;
  if (order == 2) return 1;
  if (order == 1) return 0;
  throw std::logic_error("unexpected graded Witt layer of order " +
                         order.str());
}

ScalarRing integer_ring() {
  return {AbGroup::free_group(1), {"1"}, Vec{1}, {{Vec{1}}}};
}

ScalarRing mod2_ring() {
  return {AbGroup::cyclic(2), {"1"}, Vec{1}, {{Vec{1}}}};
}

ScalarData make_scalar_data(const FieldModel& f) {
  switch (f.kind) {
    case FieldKind::QuadClosed: return scalar_quad_closed();
    case FieldKind::RealClosed: return scalar_real_closed();
    case FieldKind::FiniteOdd: return scalar_finite(f.q);
  }
  throw std::logic_error("unreachable");
}

}  // namespace cw
