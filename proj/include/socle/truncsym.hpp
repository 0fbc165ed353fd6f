#pragma once

// Truncated symmetric algebra k[x_1..x_m]/(x_j^p) with linear substitutions.

#include <vector>

#include "socle/linalg.hpp"

namespace socle {

class TruncatedPolynomial {
 public:
  TruncatedPolynomial(const FieldSpec& k, int m);

  static TruncatedPolynomial constant(const FieldSpec& k, int m, const FieldElement& c);
  /// x_j, 0-based.
  static TruncatedPolynomial variable(const FieldSpec& k, int m, int j);
  static TruncatedPolynomial monomial(const FieldSpec& k, const std::vector<int>& exponents, const FieldElement& c);
  /// prod_j x_j^(p-1).
  static TruncatedPolynomial top_monomial(const FieldSpec& k, int m);

  const FieldSpec& field() const noexcept { return *k_; }
  int variables() const noexcept { return m_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Monomials are indexed by sum_j i_j p^j.
  std::vector<int> exponents(std::size_t code) const;
  std::size_t code(const std::vector<int>& exponents) const;
  const FieldElement& coefficient(std::size_t code) const { return coeffs_[code]; }
  FieldElement& coefficient(std::size_t code) { return coeffs_[code]; }
  const FieldElement& coefficient(const std::vector<int>& e) const { return coeffs_[code(e)]; }

  bool is_zero() const;
  TruncatedPolynomial& operator+=(const TruncatedPolynomial& o);
  TruncatedPolynomial& operator*=(const FieldElement& c);
  friend bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  const FieldSpec* k_;
  int m_;
  std::vector<FieldElement> coeffs_;
};

TruncatedPolynomial tp_multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

/// x_j -> sum_i a(j, i) x_i. Throws SingularMatrix when a is not invertible.
TruncatedPolynomial substitute(const TruncatedPolynomial& f, const Matrix& a);

/// Scalar c with substitute(top, a) = c * top. Throws NotScalarMultiple otherwise.
FieldElement top_monomial_scalar(const Matrix& a);

}  // namespace socle
