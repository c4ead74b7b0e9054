#include "cw/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace cw {

AbGroup::AbGroup(std::size_t n_gens, Mat relations)
    : n_(n_gens), relations_(std::move(relations)) {
  if (relations_.rows() > 0 && relations_.cols() != n_)
    throw std::invalid_argument("relation width != generator count");
  if (relations_.rows() == 0) relations_ = Mat::zero(0, n_);
  relations_ = row_basis(relations_);
  invariants_ = invariant_factors(relations_, n_);
}

AbGroup AbGroup::free_group(std::size_t rank) {
  return AbGroup(rank, Mat::zero(0, rank));
}

AbGroup AbGroup::cyclic(const Int& order) {
  if (order == 0) return free_group(1);
  Mat r(1, 1);
  r(0, 0) = order;
  return AbGroup(1, std::move(r));
}

AbGroup AbGroup::direct_sum(const AbGroup& a, const AbGroup& b) {
  std::size_t n = a.n_ + b.n_;
  Mat r(a.relations_.rows() + b.relations_.rows(), n);
  for (std::size_t i = 0; i < a.relations_.rows(); ++i)
    for (std::size_t j = 0; j < a.n_; ++j) r(i, j) = a.relations_(i, j);
  for (std::size_t i = 0; i < b.relations_.rows(); ++i)
    for (std::size_t j = 0; j < b.n_; ++j)
      r(a.relations_.rows() + i, a.n_ + j) = b.relations_(i, j);
  return AbGroup(n, std::move(r));
}

bool AbGroup::is_zero_element(const Vec& x) const {
  if (x.size() != n_) throw std::invalid_argument("element size mismatch");
  if (relations_.rows() == 0)
    return std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
  if (!zero_test_)
    zero_test_ = std::make_shared<const LatticeSolver>(relations_.transpose());
  return zero_test_->solvable(x);
}

bool AbGroup::same_element(const Vec& x, const Vec& y) const {
  Vec d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = x[i] - y[i];
  return is_zero_element(d);
}

Int AbGroup::order() const {
  Int o = 1;
  for (const Int& d : invariants_) {
    if (d == 0) return 0;
    o *= d;
  }
  return o;
}

std::size_t AbGroup::free_rank() const {
  std::size_t r = 0;
  for (const Int& d : invariants_)
    if (d == 0) ++r;
  return r;
}

bool AbGroup::has_two_torsion() const {
  for (const Int& d : invariants_)
    if (d != 0 && d % 2 == 0) return true;
  return false;
}

std::string AbGroup::describe() const {
  if (invariants_.empty()) return "0";
  std::size_t rank = free_rank();
  std::ostringstream os;
  bool first = true;
  if (rank == 1) {
    os << "Z";
    first = false;
  } else if (rank > 1) {
    os << "Z^" << rank;
    first = false;
  }
  for (const Int& d : invariants_) {
    if (d == 0) continue;
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

bool isomorphic(const AbGroup& a, const AbGroup& b) {
  return a.invariants() == b.invariants();
}

Hom::Hom(AbGroup source, AbGroup target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)),
      matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.n_gens() || matrix_.cols() != source_.n_gens())
    throw std::invalid_argument("hom matrix has wrong shape");
  const Mat& r = source_.relations();
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Vec rel(r.cols());
    for (std::size_t j = 0; j < r.cols(); ++j) rel[j] = r(i, j);
    if (!target_.is_zero_element(matrix_ * rel))
      throw std::invalid_argument("map does not respect source relations");
  }
}

Hom Hom::zero(const AbGroup& source, const AbGroup& target) {
  return Hom(source, target, Mat::zero(target.n_gens(), source.n_gens()));
}

Hom Hom::identity(const AbGroup& g) {
  return Hom(g, g, Mat::identity(g.n_gens()));
}

Hom Hom::compose_after(const Hom& first) const {
  return Hom(first.source_, target_, matrix_ * first.matrix_);
}

bool Hom::is_zero_map() const {
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    Vec col(matrix_.rows());
    for (std::size_t i = 0; i < matrix_.rows(); ++i) col[i] = matrix_(i, j);
    if (!target_.is_zero_element(col)) return false;
  }
  return true;
}

namespace {

// Abstract presentation of lattice(P) / lattice(source relations), where the
// columns of p generate a lattice in the source's coordinate space containing
// the relation lattice.
AbGroup sublattice_quotient(const Mat& p, const Mat& source_relations) {
  // Relations among the columns of p: combinations landing in the relation
  // lattice of the ambient group.
  Mat rel_t = preimage_lattice(p, source_relations);
  return AbGroup(p.cols(), rel_t.transpose());
}

}  // namespace

Subquotient kernel(const Hom& f) {
  Mat p = preimage_lattice(f.matrix(), f.target().relations());
  // p's columns generate the full preimage of 0; they automatically contain
  // the source relation lattice since f respects it.
  return {sublattice_quotient(p, f.source().relations()), p};
}

Quotient cokernel(const Hom& f) {
  Mat rels = f.target().relations().vstack(f.matrix().transpose());
  AbGroup g(f.target().n_gens(), rels);
  return {g, Hom(f.target(), g, Mat::identity(g.n_gens()))};
}

Quotient quotient_by(const AbGroup& g, const std::vector<Vec>& gens) {
  Mat extra(gens.size(), g.n_gens());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != g.n_gens())
      throw std::invalid_argument("generator size mismatch");
    for (std::size_t j = 0; j < g.n_gens(); ++j) extra(i, j) = gens[i][j];
  }
  AbGroup q(g.n_gens(), g.relations().vstack(extra));
  return {q, Hom(g, q, Mat::identity(g.n_gens()))};
}

FiberProduct fiber_product(const Hom& f, const Hom& g) {
  if (!isomorphic(f.target(), g.target()) ||
      f.target().n_gens() != g.target().n_gens())
    throw std::invalid_argument("fiber product needs a common target");
  // (a, b) with f(a) - g(b) = 0 in the target.
  Mat stacked = f.matrix().hstack(-g.matrix());
  Mat p = preimage_lattice(stacked, f.target().relations());

  AbGroup ab = AbGroup::direct_sum(f.source(), g.source());
  AbGroup grp = sublattice_quotient(p, ab.relations());

  std::size_t na = f.source().n_gens();
  Mat proj_a = p.submatrix(0, 0, na, p.cols());
  Mat proj_b = p.submatrix(na, 0, p.rows() - na, p.cols());
  return {grp, p, Hom(grp, f.source(), proj_a), Hom(grp, g.source(), proj_b)};
}

AbGroup image(const Hom& f) {
  // im(f) = (im lattice + target relations) / target relations.
  Mat p = f.matrix();  // columns generate the image lattice
  Mat rel_t = preimage_lattice(p, f.target().relations());
  return AbGroup(p.cols(), rel_t.transpose());
}

std::optional<Vec> preimage(const Hom& f, const Vec& y) {
  // Solve f.matrix * x + rel^T * t = y.
  const Mat& rel = f.target().relations();
  Mat a = f.matrix().hstack(rel.rows() > 0
                                ? rel.transpose()
                                : Mat::zero(f.matrix().rows(), 0));
  auto sol = solve(a, y);
  if (!sol) return std::nullopt;
  return Vec(sol->begin(), sol->begin() + f.matrix().cols());
}

std::optional<Vec> express(const AbGroup& g, const std::vector<Vec>& gens,
                           const Vec& y) {
  Mat a(g.n_gens(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != g.n_gens())
      throw std::invalid_argument("generator size mismatch");
    for (std::size_t i = 0; i < g.n_gens(); ++i) a(i, j) = gens[j][i];
  }
  const Mat& rel = g.relations();
  Mat full = a.hstack(rel.rows() > 0 ? rel.transpose()
                                     : Mat::zero(g.n_gens(), 0));
  auto sol = solve(full, y);
  if (!sol) return std::nullopt;
  return Vec(sol->begin(), sol->begin() + gens.size());
}

Int subgroup_index(const AbGroup& g, const std::vector<Vec>& gens) {
  Quotient q = quotient_by(g, gens);
  return q.group.order();
}

}  // namespace cw
