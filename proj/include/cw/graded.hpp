#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cw/scalar.hpp"

namespace cw {

// Twist class in Pic/2, one bit per line-bundle factor of the ambient space.
struct Twist {
  std::vector<int> bits;  // each 0 or 1

  static Twist trivial(std::size_t dim) { return {std::vector<int>(dim, 0)}; }
  std::size_t dim() const { return bits.size(); }
  Twist operator+(const Twist& o) const;
  bool operator==(const Twist&) const = default;
  bool operator<(const Twist& o) const { return bits < o.bits; }
  bool is_trivial() const;
  std::string str() const;  // e.g. "O(1,0)"
};

using Exponents = std::vector<int>;

// Polynomial in the ring generators with scalar-ring coefficients:
// monomial exponent vector -> coefficient coordinates.
using Poly = std::map<Exponents, Vec>;

struct Generator {
  std::string name;
  int degree = 0;
  Twist twist;
  // Multiplication by the scalar ideal I kills this generator.
  bool ideal_kills = false;
  // If >= 0, g^power_cap rewrites to `rewrite` (empty poly: zero). Needed
  // for every degree-0 generator so bidegrees stay finite dimensional.
  int power_cap = -1;
  Poly rewrite;
};

// Presentation of a graded-commutative ring over a scalar ring, graded by
// (degree, twist). Signs never appear: all our generators are either even
// or commute by the conventions of the ambient theories.
class RingPresentation {
public:
  RingPresentation() = default;
  RingPresentation(ScalarRing scalar, std::vector<Vec> scalar_ideal,
                   std::vector<Generator> gens, std::vector<Poly> relations,
                   std::size_t twist_dim);

  const ScalarRing& scalar() const { return scalar_; }
  const std::vector<Generator>& gens() const { return gens_; }
  const std::vector<Poly>& relations() const { return relations_; }
  const std::vector<Vec>& scalar_ideal() const { return scalar_ideal_; }
  std::size_t twist_dim() const { return twist_dim_; }

  std::optional<std::size_t> gen_index(const std::string& name) const;

  int mono_degree(const Exponents& e) const;
  Twist mono_twist(const Exponents& e) const;

  // Apply power-cap rewrites until no exponent reaches its cap.
  Poly normalize(const Poly& p) const;
  Poly multiply(const Poly& a, const Poly& b) const;
  Poly scale(const Vec& scalar_coords, const Poly& p) const;
  Poly add(const Poly& a, const Poly& b) const;

  Poly gen_poly(const std::string& name, int power = 1) const;
  Poly scalar_poly(const Vec& coords) const;
  Poly zero_poly() const { return {}; }

  // Add relations (and/or rename) without touching the rest.
  RingPresentation with_extra_relations(std::vector<Poly> extra) const;

  std::string describe() const;

private:
  ScalarRing scalar_;
  std::vector<Vec> scalar_ideal_;
  std::vector<Generator> gens_;
  std::vector<Poly> relations_;
  std::size_t twist_dim_ = 0;
};

// The abelian group a presentation realizes in one bidegree, with enough
// bookkeeping to express arbitrary polynomials in its coordinates.
struct Realization {
  AbGroup group;
  std::vector<Exponents> monomials;        // basis slots, in order
  std::map<Exponents, std::size_t> index;  // monomial -> slot

  std::size_t scalar_width = 0;  // coordinates per monomial slot

  // Coordinates of a normalized homogeneous polynomial of this bidegree.
  Vec coords(const Poly& p) const;
};

Realization realize(const RingPresentation& r, int degree, const Twist& t);

// Map of presentations over the same scalar ring: each source generator is
// sent to a homogeneous polynomial of the target (degree preserved; the
// twist may change by the map's twist translation, which products of
// factors use).
struct GenMap {
  std::vector<Poly> images;  // one per source generator
  // Coefficient translation into the target's scalar coordinates, for maps
  // between theories with different coefficient rings. Empty: identity.
  std::optional<Mat> scalar_map;
};

// Push a polynomial of `a` through the generator map into `b`.
Poly apply_gen_map(const RingPresentation& a, const RingPresentation& b,
                   const GenMap& gm, const Poly& p);

enum class MapVerdict { Iso, InjectiveOnly, SurjectiveOnly, Neither };
std::string verdict_name(MapVerdict v);

struct BidegreeReport {
  int degree = 0;
  Twist twist;
  std::string left_group, right_group;
  MapVerdict verdict = MapVerdict::Neither;
};

// The hom between one bidegree of two presentations induced by a generator
// map, as a map of presented abelian groups.
Hom induced_hom(const RingPresentation& a, const Realization& ra,
                const RingPresentation& b, const Realization& rb,
                const GenMap& map);

MapVerdict classify_hom(const Hom& h);

// Multiplication by a fixed homogeneous element, as a map between the two
// given bidegree realizations of one presentation.
Hom multiplication_hom(const RingPresentation& r, const Realization& from,
                       const Realization& to, const Poly& factor);

// Check the generator map kills every relation of `a` (through the given
// degree bound) and classify it bidegree by bidegree.
struct ComparisonResult {
  bool relations_preserved = true;
  std::vector<BidegreeReport> reports;
  bool all_iso() const;
};
ComparisonResult compare_presentations(const RingPresentation& a,
                                       const RingPresentation& b,
                                       const GenMap& map, int max_degree);

// Tensor product over the scalar ring: generators of `b` get their twists
// appended after those of `a`; no cross relations.
RingPresentation tensor_product(const RingPresentation& a,
                                const RingPresentation& b);

std::string poly_str(const RingPresentation& r, const Poly& p);

// Serialization: plain text and a JSON string; parse inverts to_json
// bit-exactly for the data it emits.
std::string to_json(const RingPresentation& r);
RingPresentation from_json(const std::string& json, const ScalarRing& scalar,
                           const std::vector<Vec>& scalar_ideal);

}  // namespace cw
