#pragma once

// The graded restricted Lie algebra Jen_*(G) = sum_r F_r/F_{r+1} (tensored up
// to k), represented by homogeneous lifts g_1..g_m in G, together with the
// PBW bookkeeping that matches it against gr_*(kG).
//
// Jen_* is kept over the prime field: coordinates are residues mod p with
// respect to the lifts of one degree.

#include <cstdint>
#include <vector>

#include "socle/galgebra.hpp"

namespace socle {

using PrimeCoords = std::vector<int>;

struct PbwMonomial {
  std::vector<int> exponents;  // 0 <= i_j < p
  int degree = 0;              // sum i_j r_j
  int length = 0;              // sum i_j
};

class JenningsBasis {
 public:
  /// Uses the definitional dimension subgroups of the filtration and picks
  /// lifts greedily, layer by layer, in index order of F_r.
  JenningsBasis(const GroupAlgebra& kg, const RadicalFiltration& jf);

  const GroupAlgebra& algebra() const noexcept { return kg_; }
  /// F_1, F_2, ..., ending with the first trivial term.
  const std::vector<Subgroup>& series() const noexcept { return series_; }
  /// Largest r with F_r nontrivial.
  int top_degree() const noexcept { return static_cast<int>(series_.size()) - 1; }
  std::size_t size() const noexcept { return lifts_.size(); }
  const std::vector<GroupElement>& lifts() const noexcept { return lifts_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  /// d_r for r = 1 .. top_degree(); index r - 1.
  const std::vector<std::size_t>& layer_dims() const noexcept { return layer_dims_; }
  std::size_t layer_dim(int r) const;
  /// Lift indices of degree r.
  std::vector<std::size_t> layer(int r) const;
  /// gr coordinates of g_j - 1 in degree r_j.
  const Vector& lift_gr(std::size_t j) const { return lift_gr_[j]; }

  /// Coordinates of h F_{r+1} in the degree-r lift basis, computed inside the
  /// group. Throws DimensionMismatch when h is not in F_r.
  PrimeCoords layer_coordinates(GroupElement h, int r) const;
  /// Image of lift coordinates of degree r in gr_r(kG).
  Vector embed(const PrimeCoords& coords, int r) const;

  /// [x_j1, x_j2] in Jen_{r1 + r2}; empty beyond the top degree.
  PrimeCoords lie_bracket(std::size_t j1, std::size_t j2) const;
  /// x_j^[p] in Jen_{p r_j}; empty beyond the top degree.
  PrimeCoords p_restriction(std::size_t j) const;

  /// All p^m PBW monomials in lexicographic exponent order.
  std::vector<PbwMonomial> pbw_monomials() const;
  std::size_t pbw_dimension(int r) const;
  /// pbw_dimension(r) for r = 0 .. (p - 1) sum_j r_j.
  std::vector<std::size_t> pbw_dimensions() const;
  /// (p - 1) sum_r r d_r.
  int predicted_socle_degree() const;

  /// g_1^i_1 ... g_m^i_m.
  GroupElement ordered_product(const std::vector<int>& exponents) const;
  /// True iff ordered_product is a bijection from [0,p)^m onto G.
  bool normal_forms_biject() const;

  /// Dimensions per degree of the smallest graded subspace containing Jen_1
  /// and closed under bracket and p-restriction.
  std::vector<std::size_t> restricted_closure_dims() const;

 private:
  GroupAlgebra kg_;
  std::vector<Subgroup> series_;
  std::vector<GroupElement> lifts_;
  std::vector<int> degrees_;
  std::vector<std::size_t> layer_dims_;
  std::vector<Vector> lift_gr_;
  // Per degree r (index r - 1): for each group element, the base-p code of its
  // coordinates in F_r / F_{r+1}, or -1 outside F_r.
  std::vector<std::vector<std::int32_t>> coord_code_;
};

struct JqReport {
  std::vector<std::size_t> gr_dims;   // dim J^r / J^(r+1)
  std::vector<std::size_t> pbw_dims;  // PBW monomial counts
  int socle_degree = 0;
  int predicted_socle_degree = 0;
  std::size_t total = 0;
};

/// Throws DimensionMismatch unless dim gr_r = pbw_dimension(r) for every r,
/// s = (p - 1) sum r d_r, sum d_r = m and the total dimension is p^m.
JqReport jq_dimension_check(const JenningsBasis& jb, const RadicalFiltration& jf);

/// Product of (g_j - 1)^(p - 1) over the lifts in order.
AlgebraElement ordered_socle_product(const JenningsBasis& jb);

}  // namespace socle
