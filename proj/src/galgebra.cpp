#include "socle/galgebra.hpp"

#include "field_tables.hpp"

#include <algorithm>
#include <sstream>

#include "socle/expr.hpp"

namespace socle {

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& b) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& b) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const FieldElement& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

GroupAlgebra::GroupAlgebra(GroupPtr group, const FieldSpec& field)
    : group_(std::move(group)), k_(&field) {
  if (group_->p() != field.p())
    throw DomainError("field characteristic " + std::to_string(field.p()) +
                      " does not match the group's prime " + std::to_string(group_->p()));
}

AlgebraElement GroupAlgebra::zero() const { return AlgebraElement(zero_vector(*k_, dim())); }

AlgebraElement GroupAlgebra::one() const { return basis(group_->identity()); }

AlgebraElement GroupAlgebra::scalar(const FieldElement& c) const {
  auto a = zero();
  a[group_->identity()] = c;
  return a;
}

AlgebraElement GroupAlgebra::basis(GroupElement g) const {
  auto a = zero();
  a[g] = k_->one();
  return a;
}

AlgebraElement GroupAlgebra::minus_one(GroupElement g) const {
  auto a = basis(g);
  a[group_->identity()] -= k_->one();
  return a;
}

AlgebraElement GroupAlgebra::group_sum() const {
  return AlgebraElement(Vector(dim(), k_->one()));
}

AlgebraElement GroupAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  const auto& G = *group_;
  auto out = zero();
  if (const auto* t = detail::FieldTables::get(*k_)) {
    const auto ea = t->encode(a.coeffs());
    const auto eb = t->encode(b.coeffs());
    std::vector<std::uint8_t> acc(dim(), 0);
    std::vector<std::uint32_t> nz;
    for (std::uint32_t h = 0; h < dim(); ++h)
      if (eb[h]) nz.push_back(h);
    for (std::uint32_t g = 0; g < dim(); ++g) {
      if (!ea[g]) continue;
      const auto* mrow = t->mul_row(ea[g]);
      for (auto h : nz) {
        auto& slot = acc[G.multiply({g}, {h}).index];
        slot = t->add_row(slot)[mrow[eb[h]]];
      }
    }
    t->decode(acc.data(), out.coeffs());
    return out;
  }
  std::vector<std::uint32_t> nz;
  nz.reserve(dim());
  for (std::uint32_t h = 0; h < dim(); ++h)
    if (!b.coeffs()[h].is_zero()) nz.push_back(h);
  for (std::uint32_t g = 0; g < dim(); ++g) {
    const auto& ag = a.coeffs()[g];
    if (ag.is_zero()) continue;
    for (auto h : nz) out[G.multiply({g}, {h})] += ag * b.coeffs()[h];
  }
  return out;
}

AlgebraElement GroupAlgebra::power(const AlgebraElement& a, long long e) const {
  if (e < 0) return power(inverse(a), -e);
  auto result = one();
  auto base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

AlgebraElement GroupAlgebra::right_translate(const AlgebraElement& a, GroupElement h) const {
  auto out = zero();
  for (std::uint32_t g = 0; g < dim(); ++g) out[group_->multiply({g}, h)] = a.coeffs()[g];
  return out;
}

AlgebraElement GroupAlgebra::left_translate(const AlgebraElement& a, GroupElement h) const {
  auto out = zero();
  for (std::uint32_t g = 0; g < dim(); ++g) out[group_->multiply(h, {g})] = a.coeffs()[g];
  return out;
}

FieldElement GroupAlgebra::augmentation(const AlgebraElement& a) const {
  FieldElement s = k_->zero();
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

AlgebraElement GroupAlgebra::inverse(const AlgebraElement& a) const {
  const FieldElement eps = augmentation(a);
  if (eps.is_zero()) throw NotAUnit("element has augmentation 0 and is not a unit");
  // a = eps (1 - z) with z in J, so a^-1 = eps^-1 (1 + z)(1 + z^2)(1 + z^4)...
  const FieldElement eps_inv = eps.inverse();
  AlgebraElement z = one() - eps_inv * a;
  AlgebraElement acc = one();
  while (!z.is_zero()) {
    acc = multiply(acc, one() + z);
    z = multiply(z, z);
  }
  return eps_inv * acc;
}

namespace {

AlgebraElement eval_algebra(const GroupAlgebra& kg, const expr::Sum& s);

AlgebraElement eval_factor(const GroupAlgebra& kg, const expr::Factor& f) {
  switch (f.kind) {
    case expr::Factor::Kind::Integer:
      return kg.scalar(kg.field().from_int(f.value).pow(f.exponent));
    case expr::Factor::Kind::Symbol:
      if (f.letter == 't' && f.index == 0) return kg.scalar(kg.field().t().pow(f.exponent));
      if (f.letter == 'g' && f.index >= 1 && f.index <= kg.group().m())
        return kg.basis(kg.group().power(kg.group().generator(f.index - 1), f.exponent));
      throw ParseError(std::string("unexpected symbol '") + f.letter +
                       (f.index ? std::to_string(f.index) : std::string()) + "' in algebra literal");
    case expr::Factor::Kind::Paren:
      return kg.power(eval_algebra(kg, *f.inner), f.exponent);
  }
  throw ParseError("bad factor");
}

AlgebraElement eval_algebra(const GroupAlgebra& kg, const expr::Sum& s) {
  auto acc = kg.zero();
  for (const auto& term : s.terms) {
    auto prod = kg.one();
    for (const auto& f : term.factors) prod = kg.multiply(prod, eval_factor(kg, f));
    if (term.negative) acc -= prod;
    else acc += prod;
  }
  return acc;
}

}  // namespace

AlgebraElement GroupAlgebra::parse(std::string_view text) const {
  return eval_algebra(*this, expr::parse(text));
}

std::string GroupAlgebra::format(const AlgebraElement& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t g = 0; g < dim(); ++g) {
    const auto& c = a.coeffs()[g];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string word = group_->format({g});
    std::replace(word.begin(), word.end(), ' ', '*');
    const std::string cs = c.to_string();
    const bool simple = cs.find_first_of("+t") == std::string::npos;
    const std::string coeff = simple ? cs : "(" + cs + ")";
    if (g == 0) os << coeff;
    else if (c.is_one()) os << word;
    else os << coeff << '*' << word;
  }
  return first ? "0" : os.str();
}

RadicalFiltration::RadicalFiltration(const GroupAlgebra& kg)
    : kg_(kg), adapted_inverse_(kg.field(), 0, 0) {
  const auto& k = kg.field();
  const auto& G = kg.group();
  const std::size_t n = kg.dim();

  EchelonBasis j0(k, n);
  for (std::uint32_t g = 0; g < n; ++g) j0.insert(kg.basis({g}).coeffs());
  powers_.push_back(std::move(j0));

  EchelonBasis j1(k, n);
  for (std::uint32_t g = 1; g < n; ++g) j1.insert(kg.minus_one({g}).coeffs());
  powers_.push_back(std::move(j1));

  // J^(r+1) = span{ x (s - 1) : x in J^r, s in a generating set }.
  const auto gens = G.generating_set();
  while (powers_.back().dimension() > 0) {
    EchelonBasis next(k, n);
    for (const auto& row : powers_.back().rows()) {
      const AlgebraElement x(row);
      for (auto s : gens) next.insert((kg.right_translate(x, s) - x).coeffs());
    }
    powers_.push_back(std::move(next));
  }

  for (std::size_t r = 0; r + 1 < powers_.size(); ++r) {
    level_start_.push_back(adapted_.size());
    const auto& cur = powers_[r];
    const auto& nxt = powers_[r + 1];
    for (std::size_t i = 0; i < cur.dimension(); ++i) {
      if (std::binary_search(nxt.pivots().begin(), nxt.pivots().end(), cur.pivots()[i])) continue;
      adapted_.emplace_back(nxt.reduce(cur.rows()[i]));
      levels_.push_back(static_cast<int>(r));
    }
  }
  level_start_.push_back(adapted_.size());
  if (adapted_.size() != n) throw DimensionMismatch("adapted basis has wrong size");

  std::vector<Vector> cols;
  cols.reserve(n);
  for (const auto& a : adapted_) cols.push_back(a.coeffs());
  adapted_inverse_ = inverse(Matrix::from_columns(k, n, cols));
}

const EchelonBasis& RadicalFiltration::power(int r) const {
  if (r < 0) throw DomainError("negative filtration index");
  const auto idx = std::min(static_cast<std::size_t>(r), powers_.size() - 1);
  return powers_[idx];
}

std::vector<std::size_t> RadicalFiltration::dimensions() const {
  std::vector<std::size_t> d;
  for (const auto& e : powers_) d.push_back(e.dimension());
  return d;
}

std::vector<std::size_t> RadicalFiltration::graded_dimensions() const {
  std::vector<std::size_t> d;
  for (std::size_t r = 0; r + 1 < powers_.size(); ++r)
    d.push_back(powers_[r].dimension() - powers_[r + 1].dimension());
  return d;
}

bool RadicalFiltration::contains(const AlgebraElement& x, int r) const {
  return power(r).contains(x.coeffs());
}

Vector RadicalFiltration::adapted_coordinates(const AlgebraElement& x) const {
  return adapted_inverse_ * x.coeffs();
}

int RadicalFiltration::valuation(const AlgebraElement& x) const {
  const auto c = adapted_coordinates(x);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) return levels_[i];
  return socle_degree() + 1;
}

Vector RadicalFiltration::gr_coordinates(const AlgebraElement& x, int r) const {
  if (r < 0 || r > socle_degree() + 1) throw FiltrationError("degree out of range");
  if (r == socle_degree() + 1) {
    if (!x.is_zero()) throw FiltrationError("element is not in J^" + std::to_string(r));
    return {};
  }
  const auto c = adapted_coordinates(x);
  const auto lo = level_start_[static_cast<std::size_t>(r)];
  const auto hi = level_start_[static_cast<std::size_t>(r) + 1];
  for (std::size_t i = 0; i < lo; ++i)
    if (!c[i].is_zero()) throw FiltrationError("element is not in J^" + std::to_string(r));
  return Vector(c.begin() + static_cast<std::ptrdiff_t>(lo), c.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::vector<AlgebraElement> RadicalFiltration::gr_basis(int r) const {
  if (r < 0 || r > socle_degree()) return {};
  return std::vector<AlgebraElement>(
      adapted_.begin() + static_cast<std::ptrdiff_t>(level_start_[static_cast<std::size_t>(r)]),
      adapted_.begin() + static_cast<std::ptrdiff_t>(level_start_[static_cast<std::size_t>(r) + 1]));
}

std::vector<AlgebraElement> socle_basis(const GroupAlgebra& kg) {
  const auto& G = kg.group();
  const std::size_t n = kg.dim();
  const auto gens = G.generating_set();
  Matrix ops(kg.field(), 2 * gens.size() * n, n);
  const auto one = kg.field().one();
  std::size_t base = 0;
  for (auto s : gens) {
    // x -> x (s - 1) and x -> (s - 1) x
    for (std::uint32_t g = 0; g < n; ++g) {
      ops(base + G.multiply({g}, s).index, g) += one;
      ops(base + g, g) -= one;
      ops(base + n + G.multiply(s, {g}).index, g) += one;
      ops(base + n + g, g) -= one;
    }
    base += 2 * n;
  }
  std::vector<AlgebraElement> out;
  for (auto& v : nullspace(ops)) out.emplace_back(std::move(v));
  return out;
}

AlgebraElement socle_vector(const GroupAlgebra& kg, const RadicalFiltration& jf) {
  const auto n = kg.group_sum();
  const auto& top = jf.power(jf.socle_degree());
  if (top.dimension() != 1 || !top.contains(n.coeffs()))
    throw DimensionMismatch("sum of group elements does not span J^s");
  const auto soc = socle_basis(kg);
  if (soc.size() != 1) throw DimensionMismatch("socle has dimension " + std::to_string(soc.size()));
  EchelonBasis span(kg.field(), kg.dim());
  span.insert(soc[0].coeffs());
  if (!span.contains(n.coeffs())) throw DimensionMismatch("socle is not spanned by the group sum");
  return n;
}

std::vector<Subgroup> dimension_subgroups_definitional(const GroupAlgebra& kg,
                                                       const RadicalFiltration& jf) {
  const auto& G = kg.group();
  std::vector<Subgroup> series;
  std::vector<GroupElement> prev = G.elements();
  for (int r = 1;; ++r) {
    std::vector<GroupElement> cur;
    for (auto g : prev)
      if (jf.contains(kg.minus_one(g), r)) cur.push_back(g);
    auto closure = G.subgroup_closure(cur);
    if (closure.elements() != cur)
      throw DimensionMismatch("F_" + std::to_string(r) + " is not a subgroup");
    series.push_back(std::move(closure));
    if (cur.size() <= 1) break;
    prev = std::move(cur);
  }
  return series;
}

}  // namespace socle
