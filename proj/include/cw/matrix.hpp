#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cw {

using Int = boost::multiprecision::cpp_int;

// Dense row-major integer matrix. Entries are arbitrary precision since
// Smith reduction can blow up intermediate values far past 64 bits.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}
  Mat(std::initializer_list<std::initializer_list<Int>> init);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t r, std::size_t c) { return Mat(r, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Mat& o) const = default;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-() const;

  // Stack the rows of `o` beneath this matrix; column counts must agree.
  Mat vstack(const Mat& o) const;
  // Place `o` to the right of this matrix; row counts must agree.
  Mat hstack(const Mat& o) const;

  Mat row(std::size_t i) const;
  Mat col(std::size_t j) const;
  Mat submatrix(std::size_t r0, std::size_t c0, std::size_t r,
                std::size_t c) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  bool is_zero() const;

private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

using Vec = std::vector<Int>;

Vec operator*(const Mat& m, const Vec& v);

struct SmithForm {
  Mat d;  // diagonal, d(i,i) >= 0, each dividing the next
  Mat u;  // unimodular, u * a * v == d
  Mat v;  // unimodular
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const Mat& a);

// invariant_factors(a, n) describes Z^n / rowspan(a) as the
// multiset {d_1, ..., d_k, 0, ..., 0} with d_i > 1 and one 0 per free
// summand. Trivial (d = 1) factors are omitted.
std::vector<Int> invariant_factors(const Mat& relations, std::size_t n_gens);

// Exact integer solution of a * x = b, if one exists.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Columns generate the lattice {x : a * x = 0}.
Mat kernel_lattice(const Mat& a);

// Columns generate {x : a * x lies in the row span of lat}.
// `lat` rows live in the codomain of a.
Mat preimage_lattice(const Mat& a, const Mat& lat);

// Does b lie in the lattice spanned by the rows of `lat`?
bool in_row_lattice(const Mat& lat, const Vec& b);

// Repeated membership tests against one fixed column lattice: the Smith
// form is computed once, each query is a matrix-vector product plus
// divisibility checks.
class LatticeSolver {
public:
  explicit LatticeSolver(const Mat& a) : s_(smith_normal_form(a)),
                                         rows_(a.rows()) {}
  // Is a * x = b solvable over the integers?
  bool solvable(const Vec& b) const;

private:
  SmithForm s_;
  std::size_t rows_;
};

// Row-echelon basis of the row lattice: at most min(rows, cols) rows
// spanning the same lattice. Keeps later computations small when a lattice
// arrives with many redundant generators.
Mat row_basis(const Mat& a);

// Incremental version of row_basis: rows are folded into an echelon basis
// as they arrive, so generating huge redundant relation sets never
// materializes them all at once.
class RowReducer {
public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}
  void add(Vec row);
  // Echelon rows accumulated so far (at most `cols` of them).
  Mat matrix() const;

private:
  std::size_t cols_;
  // Echelon rows keyed by pivot column, pivots strictly increasing.
  std::vector<std::pair<std::size_t, Vec>> rows_;
};

}  // namespace cw
