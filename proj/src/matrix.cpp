#include "cw/matrix.hpp"

#include <algorithm>

namespace cw {

Mat::Mat(std::initializer_list<std::initializer_list<Int>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dim mismatch in mul");
  Mat p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("dim mismatch in add");
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
  return s;
}

Mat Mat::operator-() const {
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = -data_[i];
  return s;
}

Mat Mat::vstack(const Mat& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (cols_ != o.cols_) throw std::invalid_argument("dim mismatch in vstack");
  Mat s(rows_ + o.rows_, cols_);
  s.data_ = data_;
  s.data_.insert(s.data_.end(), o.data_.begin(), o.data_.end());
  return s;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (rows_ != o.rows_) throw std::invalid_argument("dim mismatch in hstack");
  Mat s(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) s(i, cols_ + j) = o(i, j);
  }
  return s;
}

Mat Mat::row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }
Mat Mat::col(std::size_t j) const { return submatrix(0, j, rows_, 1); }

Mat Mat::submatrix(std::size_t r0, std::size_t c0, std::size_t r,
                   std::size_t c) const {
  Mat s(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
  return s;
}

void Mat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap((*this)(i, k), (*this)(j, k));
}

void Mat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k)
    std::swap((*this)(k, i), (*this)(k, j));
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return x == 0; });
}

Vec operator*(const Mat& m, const Vec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("dim mismatch in apply");
  Vec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

namespace {

// Add c times row j to row i of both d and u.
void row_op(Mat& d, Mat& u, std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < d.cols(); ++k) d(i, k) += c * d(j, k);
  for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) += c * u(j, k);
}

void col_op(Mat& d, Mat& v, std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < d.rows(); ++k) d(k, i) += c * d(k, j);
  for (std::size_t k = 0; k < v.rows(); ++k) v(k, i) += c * v(k, j);
}

void negate_row(Mat& d, Mat& u, std::size_t i) {
  for (std::size_t k = 0; k < d.cols(); ++k) d(i, k) = -d(i, k);
  for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) = -u(i, k);
}

}  // namespace

SmithForm smith_normal_form(const Mat& a) {
  SmithForm s;
  s.d = a;
  s.u = Mat::identity(a.rows());
  s.v = Mat::identity(a.cols());
  Mat& d = s.d;
  const std::size_t m = a.rows(), n = a.cols();

  std::size_t t = 0;
  while (t < m && t < n) {
    // Find a pivot of minimal absolute value in the remaining block.
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (d(i, j) == 0) continue;
        Int v = abs(d(i, j));
        if (best == 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    d.swap_rows(t, pi);
    s.u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    s.v.swap_cols(t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (d(i, t) == 0) continue;
      Int q = d(i, t) / d(t, t);
      row_op(d, s.u, i, t, -q);
      if (d(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (d(t, j) == 0) continue;
      Int q = d(t, j) / d(t, t);
      col_op(d, s.v, j, t, -q);
      if (d(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared; pick a new pivot

    // Pivot divides its row and column. Make it divide the whole block:
    // if some d(i,j) is not a multiple, fold that row in and redo.
    bool divides_all = true;
    for (std::size_t i = t + 1; i < m && divides_all; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (d(i, j) % d(t, t) != 0) {
          row_op(d, s.u, t, i, 1);
          divides_all = false;
          break;
        }
    if (!divides_all) continue;

    if (d(t, t) < 0) negate_row(d, s.u, t);
    ++t;
  }
  s.rank = t;
  return s;
}

std::vector<Int> invariant_factors(const Mat& relations, std::size_t n_gens) {
  if (relations.cols() != 0 && relations.cols() != n_gens)
    throw std::invalid_argument("relation width != generator count");
  std::vector<Int> out;
  std::size_t rank = 0;
  if (relations.rows() > 0 && relations.cols() > 0) {
    SmithForm s = smith_normal_form(relations);
    rank = s.rank;
    for (std::size_t i = 0; i < s.rank; ++i)
      if (s.d(i, i) > 1) out.push_back(s.d(i, i));
  }
  for (std::size_t i = rank; i < n_gens; ++i) out.push_back(0);
  return out;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("dim mismatch in solve");
  SmithForm s = smith_normal_form(a);
  Vec c = s.u * b;
  Vec z(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.d(i, i) != 0) return std::nullopt;
      z[i] = c[i] / s.d(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * z;
}

Mat kernel_lattice(const Mat& a) {
  SmithForm s = smith_normal_form(a);
  // Columns of v past the rank span the kernel.
  std::size_t k = a.cols() - s.rank;
  Mat out(a.cols(), k);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = s.v(i, s.rank + j);
  return out;
}

Mat preimage_lattice(const Mat& a, const Mat& lat) {
  if (lat.rows() > 0 && lat.cols() != a.rows())
    throw std::invalid_argument("lattice lives in wrong space");
  // Solve a*x + lat^T*y = 0 and project onto the x block.
  Mat combined = a.hstack(lat.rows() > 0 ? lat.transpose()
                                         : Mat::zero(a.rows(), 0));
  Mat ker = kernel_lattice(combined);
  return ker.submatrix(0, 0, a.cols(), ker.cols());
}

Mat row_basis(const Mat& a) {
  Mat m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // Gather the whole column's gcd into row r by repeated division.
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      while (m(i, c) != 0) {
        if (m(r, c) != 0) {
          Int q = m(i, c) / m(r, c);
          for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= q * m(r, k);
        }
        if (m(i, c) != 0) m.swap_rows(r, i);
      }
    }
    if (m(r, c) != 0) ++r;
  }
  Mat out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

void RowReducer::add(Vec row) {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  auto pivot_of = [](const Vec& r, std::size_t from) {
    while (from < r.size() && r[from] == 0) ++from;
    return from;
  };
  std::size_t c = pivot_of(row, 0);
  while (c < cols_) {
    auto it = std::lower_bound(
        rows_.begin(), rows_.end(), c,
        [](const auto& a, std::size_t col) { return a.first < col; });
    if (it == rows_.end() || it->first != c) {
      rows_.insert(it, {c, std::move(row)});
      return;
    }
    Vec& piv = it->second;
    while (row[c] != 0) {
      Int q = row[c] / piv[c];
      if (q != 0)
        for (std::size_t k = c; k < cols_; ++k) row[k] -= q * piv[k];
      if (row[c] != 0) std::swap(row, piv);
    }
    c = pivot_of(row, c + 1);
  }
}

Mat RowReducer::matrix() const {
  Mat out(rows_.size(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = rows_[i].second[j];
  return out;
}

bool LatticeSolver::solvable(const Vec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("dim mismatch in solve");
  Vec c = s_.u * b;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s_.rank) {
      if (c[i] % s_.d(i, i) != 0) return false;
    } else if (c[i] != 0) {
      return false;
    }
  }
  return true;
}

bool in_row_lattice(const Mat& lat, const Vec& b) {
  if (lat.rows() == 0)
    return std::all_of(b.begin(), b.end(), [](const Int& x) { return x == 0; });
  return solve(lat.transpose(), b).has_value();
}

}  // namespace cw
