#pragma once

// Exact arithmetic in GF(p^n), n <= 8, with dense coefficient vectors
// reduced modulo a fixed monic irreducible polynomial.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socle/error.hpp"

namespace socle {

inline constexpr int kMaxExtensionDegree = 8;
inline constexpr int kMaxCharacteristic = 251;

class FieldElement;

/// Description of GF(p^n). Instances are interned: `get` returns a reference
/// with static lifetime, so two elements share a field iff their spec
/// pointers are equal.
class FieldSpec {
 public:
  /// GF(p^n) with the lexicographically smallest monic irreducible modulus
  /// (coefficients compared low degree first).
  static const FieldSpec& get(int p, int n = 1);

  /// GF(p^n) with an explicit modulus given low degree first, length n + 1,
  /// leading coefficient 1. Throws ReducibleModulus / DomainError.
  static const FieldSpec& get(int p, std::span<const int> modulus);

  int p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  std::uint64_t q() const noexcept { return q_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  /// Modulus in the literal grammar, e.g. "t^2+1".
  std::string modulus_string() const;
  /// "GF(9)" style label.
  std::string name() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long value) const;
  /// The class of t; equals from_int(0) when n = 1 and the modulus is t.
  FieldElement t() const;
  FieldElement from_coeffs(std::span<const int> coeffs) const;
  /// Inverse of FieldElement::index(); enumerates all q elements.
  FieldElement from_index(std::uint64_t index) const;

  /// Parses the field literal grammar: decimal integers, or polynomials in
  /// `t` such as `2*t+1`, `t^2 + 2`, `(t+1)*(t+2)`.
  FieldElement parse(std::string_view text) const;

  static bool is_prime(int p) noexcept;
  static bool is_irreducible(int p, std::span<const int> monic);

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  FieldSpec(int p, std::vector<int> modulus);
  friend struct FieldRegistry;

  int p_;
  int n_;
  std::uint64_t q_;
  std::vector<int> modulus_;  // length n + 1, monic
};

/// Element of a FieldSpec. Small value type: a spec pointer plus n residues.
class FieldElement {
 public:
  using Coeffs = std::array<std::uint8_t, kMaxExtensionDegree>;

  FieldElement(const FieldSpec& spec, const Coeffs& coeffs) noexcept
      : spec_(&spec), c_(coeffs) {}

  const FieldSpec& spec() const noexcept { return *spec_; }
  int coeff(int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
  const Coeffs& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept {
    for (int i = 0; i < spec_->n(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_one() const noexcept {
    if (c_[0] != 1) return false;
    for (int i = 1; i < spec_->n(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  /// Base-p encoding with the constant term least significant.
  std::uint64_t index() const noexcept;

  FieldElement operator-() const noexcept;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }

  /// Throws DivisionByZero on zero.
  FieldElement inverse() const;
  /// Negative exponents invert first.
  FieldElement pow(long long e) const;

  /// Literal grammar: "0", "2", "t", "2*t+1", "t^2+t".
  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return a.c_ == b.c_;
  }

 private:
  void check_same(const FieldElement& b) const {
    if (spec_ != b.spec_) throw_mismatch();
  }
  [[noreturn]] static void throw_mismatch();

  const FieldSpec* spec_;
  Coeffs c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

inline FieldElement FieldElement::operator-() const noexcept {
  FieldElement r = *this;
  const int p = spec_->p();
  for (int i = 0; i < spec_->n(); ++i)
    if (r.c_[i] != 0) r.c_[i] = static_cast<std::uint8_t>(p - r.c_[i]);
  return r;
}

inline FieldElement& FieldElement::operator+=(const FieldElement& b) {
  check_same(b);
  const int p = spec_->p();
  for (int i = 0; i < spec_->n(); ++i) {
    int s = c_[i] + b.c_[i];
    if (s >= p) s -= p;
    c_[i] = static_cast<std::uint8_t>(s);
  }
  return *this;
}

inline FieldElement& FieldElement::operator-=(const FieldElement& b) {
  check_same(b);
  const int p = spec_->p();
  for (int i = 0; i < spec_->n(); ++i) {
    int s = c_[i] - b.c_[i];
    if (s < 0) s += p;
    c_[i] = static_cast<std::uint8_t>(s);
  }
  return *this;
}

inline FieldElement& FieldElement::operator*=(const FieldElement& b) {
  check_same(b);
  const int p = spec_->p();
  const int n = spec_->n();
  if (n == 1) {
    c_[0] = static_cast<std::uint8_t>((c_[0] * b.c_[0]) % p);
    return *this;
  }
  // Schoolbook product, then reduce the high part against the monic modulus.
  std::array<int, 2 * kMaxExtensionDegree - 1> prod{};
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] += c_[i] * b.c_[j];
  }
  const auto& mod = spec_->modulus();
  for (int k = 2 * n - 2; k >= n; --k) {
    const int top = prod[k] % p;
    if (top == 0) continue;
    for (int i = 0; i < n; ++i) prod[k - n + i] += top * (p - mod[i]);
  }
  for (int i = 0; i < n; ++i) c_[i] = static_cast<std::uint8_t>(prod[i] % p);
  return *this;
}

/// True iff a lies in (k^x)^(p-1), the index p-1 subgroup of the cyclic
/// group k^x. Throws DomainError for a = 0.
bool is_pm1_power(const FieldElement& a);

}  // namespace socle
