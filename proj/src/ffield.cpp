#include "socle/ffield.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "socle/expr.hpp"

namespace socle {

namespace {

int mod_p(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of `num` modulo monic `den` over GF(p); both low degree first.
std::vector<int> poly_rem(std::vector<int> num, std::span<const int> den, int p) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    const int lead = num.back();
    const std::size_t shift = num.size() - 1 - dd;
    if (lead != 0)
      for (std::size_t i = 0; i <= dd; ++i)
        num[shift + i] = mod_p(num[shift + i] - static_cast<long long>(lead) * den[i], p);
    num.pop_back();
  }
  return num;
}

std::string format_poly(std::span<const int> c) {
  std::ostringstream os;
  bool first = true;
  for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) {
    const int v = c[static_cast<std::size_t>(d)];
    if (v == 0) continue;
    if (!first) os << '+';
    first = false;
    if (d == 0) {
      os << v;
    } else {
      if (v != 1) os << v << '*';
      os << 't';
      if (d > 1) os << '^' << d;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

struct FieldRegistry {
  std::mutex mu;
  std::deque<std::unique_ptr<FieldSpec>> specs;

  static FieldRegistry& instance() {
    static FieldRegistry r;
    return r;
  }

  const FieldSpec& intern(int p, std::vector<int> modulus) {
    std::lock_guard lock(mu);
    for (const auto& s : specs)
      if (s->p() == p && s->modulus() == modulus) return *s;
    specs.push_back(std::unique_ptr<FieldSpec>(new FieldSpec(p, std::move(modulus))));
    return *specs.back();
  }
};

bool FieldSpec::is_prime(int p) noexcept {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool FieldSpec::is_irreducible(int p, std::span<const int> monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1 .. n/2.
  for (int d = 1; d <= n / 2; ++d) {
    std::vector<int> cand(static_cast<std::size_t>(d) + 1, 0);
    cand[static_cast<std::size_t>(d)] = 1;
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t x = k;
      for (int i = 0; i < d; ++i) {
        cand[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::uint64_t>(p));
        x /= static_cast<std::uint64_t>(p);
      }
      std::vector<int> num(monic.begin(), monic.end());
      auto rem = poly_rem(std::move(num), cand, p);
      if (std::all_of(rem.begin(), rem.end(), [](int v) { return v == 0; })) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(int p, std::vector<int> modulus)
    : p_(p), n_(static_cast<int>(modulus.size()) - 1), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < n_; ++i) q_ *= static_cast<std::uint64_t>(p_);
}

const FieldSpec& FieldSpec::get(int p, std::span<const int> modulus) {
  if (!is_prime(p) || p > kMaxCharacteristic)
    throw DomainError("characteristic must be a prime <= 251, got " + std::to_string(p));
  const int n = static_cast<int>(modulus.size()) - 1;
  if (n < 1 || n > kMaxExtensionDegree)
    throw DomainError("extension degree must be in [1, 8], got " + std::to_string(n));
  std::vector<int> m(modulus.begin(), modulus.end());
  for (int& c : m) c = mod_p(c, p);
  if (m.back() != 1) throw DomainError("modulus must be monic");
  if (!is_irreducible(p, m))
    throw ReducibleModulus("modulus " + format_poly(m) + " is reducible over GF(" +
                           std::to_string(p) + ")");
  return FieldRegistry::instance().intern(p, std::move(m));
}

const FieldSpec& FieldSpec::get(int p, int n) {
  if (!is_prime(p) || p > kMaxCharacteristic)
    throw DomainError("characteristic must be a prime <= 251, got " + std::to_string(p));
  if (n < 1 || n > kMaxExtensionDegree)
    throw DomainError("extension degree must be in [1, 8], got " + std::to_string(n));
  if (n == 1) {
    const int t[] = {0, 1};
    return get(p, t);
  }
  // Enumerate monic candidates with the constant coefficient most significant,
  // so the first irreducible hit is lexicographically smallest low degree first.
  std::vector<int> cand(static_cast<std::size_t>(n) + 1, 0);
  cand[static_cast<std::size_t>(n)] = 1;
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t x = k;
    for (int i = n - 1; i >= 0; --i) {
      cand[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::uint64_t>(p));
      x /= static_cast<std::uint64_t>(p);
    }
    if (is_irreducible(p, cand)) return get(p, std::span<const int>(cand));
  }
  throw DomainError("no irreducible polynomial found");  // unreachable
}

std::string FieldSpec::modulus_string() const { return format_poly(modulus_); }

std::string FieldSpec::name() const { return "GF(" + std::to_string(q_) + ")"; }

FieldElement FieldSpec::zero() const { return FieldElement(*this, {}); }

FieldElement FieldSpec::one() const {
  FieldElement::Coeffs c{};
  c[0] = 1;
  return FieldElement(*this, c);
}

FieldElement FieldSpec::from_int(long long value) const {
  FieldElement::Coeffs c{};
  c[0] = static_cast<std::uint8_t>(mod_p(value, p_));
  return FieldElement(*this, c);
}

FieldElement FieldSpec::t() const {
  if (n_ == 1) return from_int(-modulus_[0]);
  FieldElement::Coeffs c{};
  c[1] = 1;
  return FieldElement(*this, c);
}

FieldElement FieldSpec::from_coeffs(std::span<const int> coeffs) const {
  // Accepts any length; reduces modulo the modulus.
  std::vector<int> v(coeffs.begin(), coeffs.end());
  for (int& c : v) c = mod_p(c, p_);
  if (static_cast<int>(v.size()) > n_) v = poly_rem(std::move(v), modulus_, p_);
  FieldElement::Coeffs c{};
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = static_cast<std::uint8_t>(v[i]);
  return FieldElement(*this, c);
}

FieldElement FieldSpec::from_index(std::uint64_t index) const {
  if (index >= q_) throw DomainError("field element index out of range");
  FieldElement::Coeffs c{};
  for (int i = 0; i < n_; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(p_));
    index /= static_cast<std::uint64_t>(p_);
  }
  return FieldElement(*this, c);
}

namespace {

FieldElement eval_field(const FieldSpec& k, const expr::Sum& s);

FieldElement eval_factor(const FieldSpec& k, const expr::Factor& f) {
  FieldElement base = k.zero();
  switch (f.kind) {
    case expr::Factor::Kind::Integer:
      base = k.from_int(f.value);
      break;
    case expr::Factor::Kind::Symbol:
      if (f.letter != 't' || f.index != 0)
        throw ParseError(std::string("unexpected symbol '") + f.letter +
                         "' in field literal");
      base = k.t();
      break;
    case expr::Factor::Kind::Paren:
      base = eval_field(k, *f.inner);
      break;
  }
  return base.pow(f.exponent);
}

FieldElement eval_field(const FieldSpec& k, const expr::Sum& s) {
  FieldElement acc = k.zero();
  for (const auto& term : s.terms) {
    FieldElement prod = k.one();
    for (const auto& f : term.factors) prod *= eval_factor(k, f);
    if (term.negative) prod = -prod;
    acc += prod;
  }
  return acc;
}

}  // namespace

FieldElement FieldSpec::parse(std::string_view text) const {
  return eval_field(*this, expr::parse(text));
}

void FieldElement::throw_mismatch() {
  throw FieldMismatch("operands belong to different fields");
}

std::uint64_t FieldElement::index() const noexcept {
  std::uint64_t v = 0;
  for (int i = spec_->n() - 1; i >= 0; --i)
    v = v * static_cast<std::uint64_t>(spec_->p()) + c_[static_cast<std::size_t>(i)];
  return v;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + spec_->name());
  // a^(q-2) = a^-1 in GF(q).
  return pow(static_cast<long long>(spec_->q()) - 2);
}

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = spec_->one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string FieldElement::to_string() const {
  std::vector<int> c(static_cast<std::size_t>(spec_->n()));
  for (int i = 0; i < spec_->n(); ++i) c[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)];
  return format_poly(c);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

bool is_pm1_power(const FieldElement& a) {
  if (a.is_zero()) throw DomainError("is_pm1_power: zero is not in k^x");
  const auto& k = a.spec();
  const auto e = (k.q() - 1) / static_cast<std::uint64_t>(k.p() - 1);
  return a.pow(static_cast<long long>(e)).is_one();
}

}  // namespace socle
