#include "socle/truncsym.hpp"

namespace socle {

TruncatedPolynomial::TruncatedPolynomial(const FieldSpec& k, int m) : k_(&k), m_(m) {
  if (m < 0) throw DomainError("negative number of variables");
  std::size_t n = 1;
  for (int j = 0; j < m; ++j) n *= static_cast<std::size_t>(k.p());
  coeffs_.assign(n, k.zero());
}

TruncatedPolynomial TruncatedPolynomial::constant(const FieldSpec& k, int m, const FieldElement& c) {
  TruncatedPolynomial f(k, m);
  f.coeffs_[0] = c;
  return f;
}

TruncatedPolynomial TruncatedPolynomial::variable(const FieldSpec& k, int m, int j) {
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  e.at(static_cast<std::size_t>(j)) = 1;
  return monomial(k, e, k.one());
}

TruncatedPolynomial TruncatedPolynomial::monomial(const FieldSpec& k, const std::vector<int>& exponents,
                                                  const FieldElement& c) {
  TruncatedPolynomial f(k, static_cast<int>(exponents.size()));
  for (int e : exponents)
    if (e >= k.p()) return f;
  f.coeffs_[f.code(exponents)] = c;
  return f;
}

TruncatedPolynomial TruncatedPolynomial::top_monomial(const FieldSpec& k, int m) {
  return monomial(k, std::vector<int>(static_cast<std::size_t>(m), k.p() - 1), k.one());
}

std::vector<int> TruncatedPolynomial::exponents(std::size_t code) const {
  std::vector<int> e(static_cast<std::size_t>(m_));
  const auto p = static_cast<std::size_t>(k_->p());
  for (auto& x : e) {
    x = static_cast<int>(code % p);
    code /= p;
  }
  return e;
}

std::size_t TruncatedPolynomial::code(const std::vector<int>& exponents) const {
  if (exponents.size() != static_cast<std::size_t>(m_)) throw DimensionMismatch("exponent tuple has wrong length");
  std::size_t c = 0;
  for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) {
    if (*it < 0 || *it >= k_->p()) throw DomainError("exponent out of range");
    c = c * static_cast<std::size_t>(k_->p()) + static_cast<std::size_t>(*it);
  }
  return c;
}

bool TruncatedPolynomial::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& o) {
  if (k_ != o.k_ || m_ != o.m_) throw FieldMismatch("truncated polynomials over different rings");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(const FieldElement& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedPolynomial tp_multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  if (&a.field() != &b.field() || a.variables() != b.variables())
    throw FieldMismatch("truncated polynomials over different rings");
  TruncatedPolynomial out(a.field(), a.variables());
  const int p = a.field().p();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coefficient(i).is_zero()) continue;
    const auto ei = a.exponents(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b.coefficient(j).is_zero()) continue;
      // Digit-wise addition of codes; any carry means some x^p appears.
      const auto ej = b.exponents(j);
      bool vanishes = false;
      for (std::size_t v = 0; v < ei.size() && !vanishes; ++v) vanishes = ei[v] + ej[v] >= p;
      if (vanishes) continue;
      auto c = a.coefficient(i);
      c *= b.coefficient(j);
      out.coefficient(i + j) += c;
    }
  }
  return out;
}

TruncatedPolynomial substitute(const TruncatedPolynomial& f, const Matrix& a) {
  const int m = f.variables();
  const auto& k = f.field();
  if (a.rows() != static_cast<std::size_t>(m) || a.cols() != static_cast<std::size_t>(m))
    throw DimensionMismatch("substitution matrix has wrong shape");
  if (determinant(a).is_zero()) throw SingularMatrix("substitution matrix is singular");

  const int p = k.p();
  // powers[j][e] = (image of x_j)^e
  std::vector<std::vector<TruncatedPolynomial>> powers(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    TruncatedPolynomial image(k, m);
    for (int i = 0; i < m; ++i) {
      auto x = TruncatedPolynomial::variable(k, m, i);
      x *= a(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
      image += x;
    }
    auto& pw = powers[static_cast<std::size_t>(j)];
    pw.push_back(TruncatedPolynomial::constant(k, m, k.one()));
    for (int e = 1; e < p; ++e) pw.push_back(tp_multiply(pw.back(), image));
  }

  TruncatedPolynomial out(k, m);
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f.coefficient(c).is_zero()) continue;
    const auto e = f.exponents(c);
    auto term = TruncatedPolynomial::constant(k, m, f.coefficient(c));
    for (int j = 0; j < m; ++j)
      term = tp_multiply(term, powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(e[static_cast<std::size_t>(j)])]);
    out += term;
  }
  return out;
}

FieldElement top_monomial_scalar(const Matrix& a) {
  const auto& k = a.field();
  const int m = static_cast<int>(a.rows());
  const auto top = TruncatedPolynomial::top_monomial(k, m);
  const auto image = substitute(top, a);
  const std::size_t top_code = image.size() - 1;
  for (std::size_t c = 0; c < top_code; ++c)
    if (!image.coefficient(c).is_zero()) throw NotScalarMultiple("substituted top monomial has lower terms");
  return image.coefficient(top_code);
}

}  // namespace socle
