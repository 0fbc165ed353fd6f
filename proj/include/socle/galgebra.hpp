#pragma once

// The group algebra kG of a finite p-group over GF(q), q a power of p, and
// its radical (augmentation) filtration J^0 = kG > J > J^2 > ... > J^s > 0.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socle/ffield.hpp"
#include "socle/linalg.hpp"
#include "socle/pgroup.hpp"

namespace socle {

/// Element of kG as the coefficient vector indexed by GroupElement::index.
class AlgebraElement {
 public:
  explicit AlgebraElement(Vector coeffs) : c_(std::move(coeffs)) {}

  std::size_t size() const noexcept { return c_.size(); }
  const Vector& coeffs() const noexcept { return c_; }
  Vector& coeffs() noexcept { return c_; }
  const FieldElement& operator[](GroupElement g) const { return c_[g.index]; }
  FieldElement& operator[](GroupElement g) { return c_[g.index]; }
  bool is_zero() const { return socle::is_zero(c_); }

  AlgebraElement& operator+=(const AlgebraElement& b);
  AlgebraElement& operator-=(const AlgebraElement& b);
  AlgebraElement& operator*=(const FieldElement& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const FieldElement& c, AlgebraElement a) { return a *= c; }
  AlgebraElement operator-() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.c_ == b.c_; }

 private:
  Vector c_;
};

class GroupAlgebra {
 public:
  /// Throws DomainError when char k differs from the group's prime.
  GroupAlgebra(GroupPtr group, const FieldSpec& field);

  const PcGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const FieldSpec& field() const noexcept { return *k_; }
  std::size_t dim() const noexcept { return group_->order(); }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement scalar(const FieldElement& c) const;
  AlgebraElement basis(GroupElement g) const;
  /// g - 1.
  AlgebraElement minus_one(GroupElement g) const;
  /// n = sum of all group elements.
  AlgebraElement group_sum() const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement power(const AlgebraElement& a, long long e) const;
  /// a * h and h * a for a group element h (permutations of coefficients).
  AlgebraElement right_translate(const AlgebraElement& a, GroupElement h) const;
  AlgebraElement left_translate(const AlgebraElement& a, GroupElement h) const;

  /// Sum of coefficients; a ring homomorphism kG -> k with kernel J.
  FieldElement augmentation(const AlgebraElement& a) const;
  /// Inverse of a unit through a = e(1 - z), z nilpotent. Throws NotAUnit.
  AlgebraElement inverse(const AlgebraElement& a) const;

  /// Literal grammar `c1*w1 + c2*w2 + ...`, e.g. `1 + (t+1)*g1*g2`.
  AlgebraElement parse(std::string_view text) const;
  std::string format(const AlgebraElement& a) const;

 private:
  GroupPtr group_;
  const FieldSpec* k_;
};

/// Echelon bases of J^r for r = 0 .. s+1 together with a basis of kG adapted
/// to the filtration (the gr_r complements picked by echelon pivots).
class RadicalFiltration {
 public:
  explicit RadicalFiltration(const GroupAlgebra& kg);

  const GroupAlgebra& algebra() const noexcept { return kg_; }
  /// Largest r with J^r != 0.
  int socle_degree() const noexcept { return static_cast<int>(powers_.size()) - 2; }
  /// Echelon basis of J^r; r may exceed s + 1 (returns the zero space).
  const EchelonBasis& power(int r) const;
  /// dim J^r for r = 0 .. s+1.
  std::vector<std::size_t> dimensions() const;
  /// dim J^r / J^(r+1) for r = 0 .. s.
  std::vector<std::size_t> graded_dimensions() const;

  bool contains(const AlgebraElement& x, int r) const;
  /// Largest r with x in J^r; s + 1 for x = 0.
  int valuation(const AlgebraElement& x) const;
  /// Coordinates of x + J^(r+1) in the fixed basis of gr_r. Throws
  /// FiltrationError when x is not in J^r.
  Vector gr_coordinates(const AlgebraElement& x, int r) const;
  /// Adapted basis vectors of level r (their classes form the gr_r basis).
  std::vector<AlgebraElement> gr_basis(int r) const;
  /// Adapted basis of kG with the level of each vector.
  const std::vector<AlgebraElement>& adapted_basis() const noexcept { return adapted_; }
  const std::vector<int>& adapted_levels() const noexcept { return levels_; }
  /// Coordinates of x in the adapted basis.
  Vector adapted_coordinates(const AlgebraElement& x) const;
  /// Change of basis from group-element coordinates to adapted coordinates.
  const Matrix& adapted_inverse() const noexcept { return adapted_inverse_; }

 private:
  GroupAlgebra kg_;
  std::vector<EchelonBasis> powers_;
  std::vector<AlgebraElement> adapted_;
  std::vector<int> levels_;
  std::vector<std::size_t> level_start_;  // first adapted index of each level
  Matrix adapted_inverse_;
};

/// {x : xJ = Jx = 0}, as a basis; computed as a nullspace.
std::vector<AlgebraElement> socle_basis(const GroupAlgebra& kg);

/// n = sum of G after checking that it spans J^s and that the socle is
/// one-dimensional. Throws DimensionMismatch otherwise.
AlgebraElement socle_vector(const GroupAlgebra& kg, const RadicalFiltration& jf);

/// F_r = {g : g - 1 in J^r}, r = 1, 2, ..., ending with the first trivial
/// term; each verified to be a subgroup.
std::vector<Subgroup> dimension_subgroups_definitional(const GroupAlgebra& kg,
                                                       const RadicalFiltration& jf);

}  // namespace socle
