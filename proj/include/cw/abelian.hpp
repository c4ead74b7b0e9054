#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cw/matrix.hpp"

namespace cw {

// Finitely presented abelian group: Z^n modulo the lattice spanned by the
// rows of `relations`. Elements are coordinate vectors of length n.
class AbGroup {
public:
  AbGroup() : n_(0), relations_(0, 0) {}
  AbGroup(std::size_t n_gens, Mat relations);

  static AbGroup free_group(std::size_t rank);
  static AbGroup cyclic(const Int& order);  // order 0 means Z
  static AbGroup trivial() { return free_group(0); }
  static AbGroup direct_sum(const AbGroup& a, const AbGroup& b);

  std::size_t n_gens() const { return n_; }
  const Mat& relations() const { return relations_; }
  const std::vector<Int>& invariants() const { return invariants_; }

  bool is_trivial() const { return invariants_.empty(); }
  bool is_zero_element(const Vec& x) const;
  bool same_element(const Vec& x, const Vec& y) const;

  // Order of the group; 0 if infinite.
  Int order() const;
  std::size_t free_rank() const;
  bool has_two_torsion() const;

  std::string describe() const;  // e.g. "Z^2 + Z/2 + Z/4", "0"

private:
  std::size_t n_;
  Mat relations_;
  std::vector<Int> invariants_;
  // Lazy Smith form of the relation lattice for membership tests; shared by
  // copies (the presentation is immutable once built).
  mutable std::shared_ptr<const LatticeSolver> zero_test_;
};

bool isomorphic(const AbGroup& a, const AbGroup& b);

// Homomorphism between presented groups: x -> matrix * x on coordinates.
// The constructor checks the map kills the source relation lattice.
class Hom {
public:
  Hom(AbGroup source, AbGroup target, Mat matrix);

  static Hom zero(const AbGroup& source, const AbGroup& target);
  static Hom identity(const AbGroup& g);

  const AbGroup& source() const { return source_; }
  const AbGroup& target() const { return target_; }
  const Mat& matrix() const { return matrix_; }

  Vec apply(const Vec& x) const { return matrix_ * x; }
  Hom compose_after(const Hom& first) const;  // this . first
  bool is_zero_map() const;

private:
  AbGroup source_, target_;
  Mat matrix_;
};

struct Subquotient {
  AbGroup group;
  // Columns are coordinates (in the ambient presentation) of the
  // subquotient's generators; row i of a relation acts on these.
  Mat embedding;
};

// ker(f) as an abstract group, with its inclusion into the source.
Subquotient kernel(const Hom& f);

// coker(f) = target / im(f); `projection` maps target coords onto it.
struct Quotient {
  AbGroup group;
  Hom projection;
};
Quotient cokernel(const Hom& f);

// Quotient of g by the subgroup generated by the given coordinate vectors.
Quotient quotient_by(const AbGroup& g, const std::vector<Vec>& gens);

// {(a, b) : f(a) = g(b)} with its two projections. f and g must share a
// target.
struct FiberProduct {
  AbGroup group;
  Mat embedding;  // columns: generator coords inside source(f) (+) source(g)
  Hom to_first;
  Hom to_second;
};
FiberProduct fiber_product(const Hom& f, const Hom& g);

// Image of f as a subgroup of the target, presented abstractly.
AbGroup image(const Hom& f);

// Solve f(x) = y in the source, if possible.
std::optional<Vec> preimage(const Hom& f, const Vec& y);

// Express y as an integer combination of the given vectors, modulo the
// relations of g. Returns the coefficients if such a combination exists.
std::optional<Vec> express(const AbGroup& g, const std::vector<Vec>& gens,
                           const Vec& y);

// Index of the subgroup generated by `gens` in g; 0 if infinite index,
// 1 if the generators span.
Int subgroup_index(const AbGroup& g, const std::vector<Vec>& gens);

}  // namespace cw
