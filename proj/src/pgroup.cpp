#include "socle/pgroup.hpp"

#include <algorithm>
#include <sstream>

#include "socle/expr.hpp"

namespace socle {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PcPresentation PcPresentation::elementary(std::string name, int p, int m) {
  PcPresentation pres;
  pres.name = std::move(name);
  pres.p = p;
  pres.m = m;
  pres.powers.assign(static_cast<std::size_t>(m), Exponents(static_cast<std::size_t>(m), 0));
  return pres;
}

PcPresentation& PcPresentation::power(int i, std::initializer_list<std::pair<int, int>> rhs) {
  auto& e = powers.at(static_cast<std::size_t>(i - 1));
  std::fill(e.begin(), e.end(), 0);
  for (auto [g, x] : rhs) e.at(static_cast<std::size_t>(g - 1)) = x;
  return *this;
}

PcPresentation& PcPresentation::commutator(int j, int i,
                                           std::initializer_list<std::pair<int, int>> rhs) {
  Exponents e(static_cast<std::size_t>(m), 0);
  for (auto [g, x] : rhs) e.at(static_cast<std::size_t>(g - 1)) = x;
  commutators[{j - 1, i - 1}] = std::move(e);
  return *this;
}

bool Subgroup::contains(GroupElement g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

PcGroup::PcGroup(PcPresentation presentation) : pres_(std::move(presentation)) {
  const int p = pres_.p;
  const int m = pres_.m;
  if (!is_prime(p)) throw InconsistentPresentation("p = " + std::to_string(p) + " is not prime");
  if (m < 0) throw InconsistentPresentation("negative number of generators");
  for (int i = 0; i < m; ++i) {
    order_ *= static_cast<std::size_t>(p);
    if (order_ > kMaxGroupOrder)
      throw InconsistentPresentation("group order exceeds " + std::to_string(kMaxGroupOrder));
  }
  pres_.powers.resize(static_cast<std::size_t>(m), Exponents(static_cast<std::size_t>(m), 0));
  auto check_rhs = [&](const Exponents& e, int above, const std::string& what) {
    if (e.size() != static_cast<std::size_t>(m))
      throw InconsistentPresentation(what + ": wrong exponent vector length");
    for (int k = 0; k < m; ++k) {
      const int x = e[static_cast<std::size_t>(k)];
      if (x < 0 || x >= p) throw InconsistentPresentation(what + ": exponent out of range");
      if (x != 0 && k <= above)
        throw InconsistentPresentation(what + ": right-hand side may only use generators above g" +
                                       std::to_string(above + 1));
    }
  };
  for (int i = 0; i < m; ++i)
    check_rhs(pres_.powers[static_cast<std::size_t>(i)], i, "power relation of g" + std::to_string(i + 1));
  for (const auto& [key, e] : pres_.commutators) {
    const auto [j, i] = key;
    if (!(0 <= i && i < j && j < m))
      throw InconsistentPresentation("commutator relation must be [gj,gi] with j > i");
    check_rhs(e, j, "commutator relation [g" + std::to_string(j + 1) + ",g" + std::to_string(i + 1) + "]");
  }
  build_table();
  certify();
}

GroupElement PcGroup::generator(int i) const {
  if (i < 0 || i >= m()) throw DomainError("generator index out of range");
  std::uint32_t idx = 1;
  for (int k = 0; k < i; ++k) idx *= static_cast<std::uint32_t>(p());
  return GroupElement{idx};
}

GroupElement PcGroup::element(std::span<const int> exponents) const {
  if (exponents.size() != static_cast<std::size_t>(m())) throw DomainError("exponent vector length mismatch");
  std::uint32_t idx = 0;
  for (int k = m() - 1; k >= 0; --k) {
    const int e = exponents[static_cast<std::size_t>(k)];
    if (e < 0 || e >= p()) throw DomainError("exponent out of range");
    idx = idx * static_cast<std::uint32_t>(p()) + static_cast<std::uint32_t>(e);
  }
  return GroupElement{idx};
}

Exponents PcGroup::exponents(GroupElement g) const {
  Exponents e(static_cast<std::size_t>(m()));
  std::uint32_t idx = g.index;
  for (int k = 0; k < m(); ++k) {
    e[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::uint32_t>(p()));
    idx /= static_cast<std::uint32_t>(p());
  }
  return e;
}

std::vector<GroupElement> PcGroup::elements() const {
  std::vector<GroupElement> out(order_);
  for (std::size_t i = 0; i < order_; ++i) out[i] = GroupElement{static_cast<std::uint32_t>(i)};
  return out;
}

GroupElement PcGroup::collect_during_build(const Word& word) const {
  const int m = this->m();
  const int p = this->p();
  Exponents e(static_cast<std::size_t>(m), 0);
  std::vector<int> stack;  // letters still to multiply on the right; top is next
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    for (long long r = 0; r < it->exponent; ++r) stack.push_back(it->generator);

  auto push_normal_form = [](std::vector<int>& out, const Exponents& w) {
    for (std::size_t k = 0; k < w.size(); ++k)
      for (int r = 0; r < w[k]; ++r) out.push_back(static_cast<int>(k));
  };

  std::vector<int> pending;
  while (!stack.empty()) {
    const int k = stack.back();
    stack.pop_back();
    // c * g_k = (g_1^e_1 .. g_k^(e_k + 1)) * T^(g_k), where T is the tail above
    // k and g_j^(g_k) = g_j [g_j, g_k].
    pending.clear();
    auto& ek = e[static_cast<std::size_t>(k)];
    if (++ek == p) {
      ek = 0;
      push_normal_form(pending, pres_.powers[static_cast<std::size_t>(k)]);
    }
    for (int j = k + 1; j < m; ++j) {
      auto& ej = e[static_cast<std::size_t>(j)];
      if (ej == 0) continue;
      auto rel = pres_.commutators.find({j, k});
      for (int r = 0; r < ej; ++r) {
        pending.push_back(j);
        if (rel != pres_.commutators.end()) push_normal_form(pending, rel->second);
      }
      ej = 0;
    }
    stack.insert(stack.end(), pending.rbegin(), pending.rend());
  }
  return element(e);
}

void PcGroup::build_table() {
  const int m = this->m();
  const std::size_t n = order_;
  // Right multiplication by each generator, by collection.
  std::vector<std::uint32_t> right(n * static_cast<std::size_t>(m));
  for (std::size_t a = 0; a < n; ++a) {
    Word w;
    const auto ea = exponents(GroupElement{static_cast<std::uint32_t>(a)});
    for (int k = 0; k < m; ++k)
      if (ea[static_cast<std::size_t>(k)] != 0) w.push_back({k, ea[static_cast<std::size_t>(k)]});
    for (int k = 0; k < m; ++k) {
      Word wk = w;
      wk.push_back({k, 1});
      right[a * static_cast<std::size_t>(m) + static_cast<std::size_t>(k)] = collect_during_build(wk).index;
    }
  }
  table_.assign(n * n, 0);
  for (std::size_t b = 0; b < n; ++b) {
    const auto eb = exponents(GroupElement{static_cast<std::uint32_t>(b)});
    for (std::size_t a = 0; a < n; ++a) {
      std::uint32_t x = static_cast<std::uint32_t>(a);
      for (int k = 0; k < m; ++k)
        for (int r = 0; r < eb[static_cast<std::size_t>(k)]; ++r)
          x = right[x * static_cast<std::size_t>(m) + static_cast<std::size_t>(k)];
      table_[a * n + b] = x;
    }
  }
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      if (table_[a * n + b] == 0) {
        inverse_[a] = static_cast<std::uint32_t>(b);
        found = true;
      }
    if (!found)
      throw InconsistentPresentation("collected multiplication has no right inverse for " + format(GroupElement{static_cast<std::uint32_t>(a)}));
  }
}

void PcGroup::certify() const {
  const std::size_t n = order_;
  for (std::size_t a = 0; a < n; ++a)
    if (table_[a] != a || table_[a * n] != a)
      throw InconsistentPresentation("collected multiplication: identity law fails");
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      auto& s = seen[table_[a * n + b]];
      if (s) throw InconsistentPresentation("collected multiplication: cancellation fails");
      s = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table_[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (table_[ab * n + c] != table_[a * n + table_[b * n + c]])
          throw InconsistentPresentation(
              "collected multiplication is not associative: (" + format(GroupElement{static_cast<std::uint32_t>(a)}) +
              ")(" + format(GroupElement{static_cast<std::uint32_t>(b)}) + ")(" +
              format(GroupElement{static_cast<std::uint32_t>(c)}) + ")");
    }
  for (int i = 0; i < m(); ++i) {
    if (power(generator(i), p()) != element(pres_.powers[static_cast<std::size_t>(i)]))
      throw InconsistentPresentation("power relation of g" + std::to_string(i + 1) + " fails");
    for (int j = i + 1; j < m(); ++j) {
      auto rel = pres_.commutators.find({j, i});
      const GroupElement want = rel == pres_.commutators.end() ? identity() : element(rel->second);
      if (commutator(generator(j), generator(i)) != want)
        throw InconsistentPresentation("commutator relation [g" + std::to_string(j + 1) + ",g" +
                                       std::to_string(i + 1) + "] fails");
    }
  }
}

GroupElement PcGroup::collect(const Word& word) const {
  GroupElement x = identity();
  for (const auto& l : word) x = multiply(x, power(generator(l.generator), l.exponent));
  return x;
}

GroupElement PcGroup::commutator(GroupElement a, GroupElement b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

GroupElement PcGroup::power(GroupElement a, long long e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  GroupElement r = identity();
  while (e > 0) {
    if (e & 1) r = multiply(r, a);
    a = multiply(a, a);
    e >>= 1;
  }
  return r;
}

std::string PcGroup::format(GroupElement g) const {
  const auto e = exponents(g);
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < m(); ++k) {
    const int x = e[static_cast<std::size_t>(k)];
    if (x == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << 'g' << (k + 1);
    if (x > 1) os << '^' << x;
  }
  return first ? "1" : os.str();
}

GroupElement PcGroup::parse_word(std::string_view text) const {
  const auto sum = expr::parse(text);
  if (sum.terms.size() != 1 || sum.terms[0].negative)
    throw ParseError("group word must be a single product: '" + std::string(text) + "'");
  GroupElement x = identity();
  for (const auto& f : sum.terms[0].factors) {
    if (f.kind == expr::Factor::Kind::Integer && f.value == 1) continue;
    if (f.kind != expr::Factor::Kind::Symbol || f.letter != 'g' || f.index < 1 || f.index > m())
      throw ParseError("bad factor in group word '" + std::string(text) + "'");
    x = multiply(x, power(generator(f.index - 1), f.exponent));
  }
  return x;
}

std::string PcGroup::presentation_text() const {
  std::ostringstream os;
  os << "pcgroup p=" << p() << " m=" << m() << '\n';
  for (int i = 0; i < m(); ++i)
    os << 'g' << (i + 1) << '^' << p() << " = " << format(element(pres_.powers[static_cast<std::size_t>(i)])) << '\n';
  for (const auto& [key, e] : pres_.commutators) {
    const GroupElement w = element(e);
    if (w == identity()) continue;
    os << "[g" << (key.first + 1) << ",g" << (key.second + 1) << "] = " << format(w) << '\n';
  }
  return os.str();
}

namespace {

// Right-hand side of a relation line: normal-form word or `1`.
Exponents parse_normal_form(std::string_view text, int p, int m) {
  Exponents e(static_cast<std::size_t>(m), 0);
  const auto sum = expr::parse(text);
  if (sum.terms.size() != 1 || sum.terms[0].negative)
    throw ParseError("relation right-hand side must be a normal-form word: '" + std::string(text) + "'");
  int last = 0;
  for (const auto& f : sum.terms[0].factors) {
    if (f.kind == expr::Factor::Kind::Integer && f.value == 1 && sum.terms[0].factors.size() == 1) return e;
    if (f.kind != expr::Factor::Kind::Symbol || f.letter != 'g' || f.index < 1 || f.index > m)
      throw ParseError("bad factor in relation '" + std::string(text) + "'");
    if (f.index <= last || f.exponent < 1 || f.exponent >= p)
      throw ParseError("right-hand side is not in normal form: '" + std::string(text) + "'");
    last = f.index;
    e[static_cast<std::size_t>(f.index - 1)] = static_cast<int>(f.exponent);
  }
  return e;
}

int parse_generator(std::string_view tok) {
  const auto t = expr::trim(tok);
  if (t.size() < 2 || t[0] != 'g') throw ParseError("expected generator, got '" + t + "'");
  try {
    std::size_t used = 0;
    const int v = std::stoi(t.substr(1), &used);
    if (used != t.size() - 1) throw ParseError("bad generator '" + t + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad generator '" + t + "'");
  }
}

}  // namespace

PcGroup PcGroup::parse(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  PcPresentation pres;
  pres.name = std::move(name);
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = expr::trim(line);
    if (line.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (!have_header) {
      std::istringstream hs(line);
      std::string word;
      hs >> word;
      if (word != "pcgroup") throw ParseError("expected 'pcgroup p=.. m=..' header" + where);
      int p = 0, m = -1;
      while (hs >> word) {
        if (word.rfind("p=", 0) == 0) p = std::stoi(word.substr(2));
        else if (word.rfind("m=", 0) == 0) m = std::stoi(word.substr(2));
        else if (word.rfind("name=", 0) == 0) pres.name = word.substr(5);
        else throw ParseError("unknown header field '" + word + "'" + where);
      }
      if (p < 2 || m < 0) throw ParseError("header needs p=<prime> m=<count>" + where);
      pres.p = p;
      pres.m = m;
      pres.powers.assign(static_cast<std::size_t>(m), Exponents(static_cast<std::size_t>(m), 0));
      have_header = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected '=' in relation" + where);
    const std::string lhs = expr::trim(std::string_view(line).substr(0, eq));
    const std::string rhs = expr::trim(std::string_view(line).substr(eq + 1));
    const Exponents value = parse_normal_form(rhs, pres.p, pres.m);
    if (!lhs.empty() && lhs.front() == '[') {
      if (lhs.back() != ']') throw ParseError("unterminated commutator" + where);
      const auto parts = expr::split_top_level(std::string_view(lhs).substr(1, lhs.size() - 2), ',');
      if (parts.size() != 2) throw ParseError("commutator needs two generators" + where);
      const int j = parse_generator(parts[0]);
      const int i = parse_generator(parts[1]);
      if (!(1 <= i && i < j && j <= pres.m))
        throw ParseError("commutator relation must be [gj,gi] with m >= j > i >= 1" + where);
      pres.commutators[{j - 1, i - 1}] = value;
    } else {
      const auto caret = lhs.find('^');
      if (caret == std::string::npos) throw ParseError("expected gi^p or [gj,gi]" + where);
      const int i = parse_generator(std::string_view(lhs).substr(0, caret));
      if (std::stoi(lhs.substr(caret + 1)) != pres.p)
        throw ParseError("power relation exponent must equal p" + where);
      if (i < 1 || i > pres.m) throw ParseError("generator out of range" + where);
      pres.powers[static_cast<std::size_t>(i - 1)] = value;
    }
  }
  if (!have_header) throw ParseError("empty presentation");
  return PcGroup(std::move(pres));
}

Subgroup PcGroup::subgroup_closure(std::span<const GroupElement> gens) const {
  std::vector<char> mark(order_, 0);
  std::vector<GroupElement> uniq;
  for (auto g : gens) {
    if (g == identity() || mark[g.index]) continue;
    mark[g.index] = 1;
    uniq.push_back(g);
  }
  std::fill(mark.begin(), mark.end(), 0);
  std::vector<GroupElement> elems{identity()};
  mark[0] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (auto g : uniq) {
      const GroupElement x = multiply(elems[head], g);
      if (!mark[x.index]) {
        mark[x.index] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return Subgroup(std::move(elems), std::move(uniq));
}

Subgroup PcGroup::whole() const {
  std::vector<GroupElement> gens;
  for (int i = 0; i < m(); ++i) gens.push_back(generator(i));
  return Subgroup(elements(), std::move(gens));
}

Subgroup PcGroup::trivial() const { return Subgroup({identity()}, {}); }

Subgroup PcGroup::commutator_subgroup(const Subgroup& a, const Subgroup& b) const {
  std::vector<char> mark(order_, 0);
  std::vector<GroupElement> gens;
  for (auto x : a.elements())
    for (auto y : b.elements()) {
      const auto c = commutator(x, y);
      if (!mark[c.index]) {
        mark[c.index] = 1;
        gens.push_back(c);
      }
    }
  return subgroup_closure(gens);
}

std::vector<Subgroup> PcGroup::lower_central_series() const {
  std::vector<Subgroup> series{whole()};
  const Subgroup g = whole();
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(series.back(), g);
    if (next == series.back()) break;  // cannot happen for p-groups
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup PcGroup::agemo(const Subgroup& s, int j) const {
  long long e = 1;
  for (int i = 0; i < j; ++i) e *= p();
  std::vector<GroupElement> gens;
  gens.reserve(s.order());
  for (auto x : s.elements()) gens.push_back(power(x, e));
  return subgroup_closure(gens);
}

Subgroup PcGroup::frattini() const {
  const Subgroup g = whole();
  auto gens = agemo(g, 1).elements();
  const auto gamma2 = commutator_subgroup(g, g);
  gens.insert(gens.end(), gamma2.elements().begin(), gamma2.elements().end());
  return subgroup_closure(gens);
}

std::vector<Subgroup> PcGroup::jennings_series_recursive() const {
  const Subgroup g = whole();
  std::vector<Subgroup> f{g};
  for (std::size_t r = 2; !f.back().is_trivial(); ++r) {
    const Subgroup comm = commutator_subgroup(f[r - 2], g);
    const std::size_t src = (r + static_cast<std::size_t>(p()) - 1) / static_cast<std::size_t>(p());
    std::vector<GroupElement> gens = comm.elements();
    for (auto x : f[src - 1].elements()) gens.push_back(power(x, p()));
    f.push_back(subgroup_closure(gens));
  }
  return f;
}

std::vector<GroupElement> PcGroup::generating_set() const {
  std::vector<GroupElement> gens;
  Subgroup h = trivial();
  for (int i = 0; i < m(); ++i) {
    const auto gi = generator(i);
    if (h.contains(gi)) continue;
    gens.push_back(gi);
    h = subgroup_closure(gens);
  }
  return gens;
}

GroupAutomorphism PcGroup::automorphism(std::span<const GroupElement> images) const {
  if (images.size() != static_cast<std::size_t>(m()))
    throw RelationViolation("automorphism needs one image per generator");
  GroupAutomorphism aut;
  aut.images_.assign(images.begin(), images.end());
  // powers[i][e] = images[i]^e
  std::vector<std::vector<GroupElement>> pw(static_cast<std::size_t>(m()));
  for (int i = 0; i < m(); ++i) {
    auto& row = pw[static_cast<std::size_t>(i)];
    row.push_back(identity());
    for (int e = 1; e < p(); ++e) row.push_back(multiply(row.back(), images[static_cast<std::size_t>(i)]));
  }
  aut.map_.resize(order_);
  std::vector<char> seen(order_, 0);
  std::size_t distinct = 0;
  for (std::size_t idx = 0; idx < order_; ++idx) {
    const auto e = exponents(GroupElement{static_cast<std::uint32_t>(idx)});
    GroupElement x = identity();
    for (int i = 0; i < m(); ++i) x = multiply(x, pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[static_cast<std::size_t>(i)])]);
    aut.map_[idx] = x;
    if (!seen[x.index]) {
      seen[x.index] = 1;
      ++distinct;
    }
  }
  if (distinct != order_)
    throw NotBijective("generator images reach only " + std::to_string(distinct) + " of " +
                       std::to_string(order_) + " elements");
  for (int i = 0; i < m(); ++i) {
    const auto gi = images[static_cast<std::size_t>(i)];
    if (power(gi, p()) != aut.map_[element(pres_.powers[static_cast<std::size_t>(i)]).index])
      throw RelationViolation("image violates power relation of g" + std::to_string(i + 1));
    for (int j = i + 1; j < m(); ++j) {
      auto rel = pres_.commutators.find({j, i});
      const GroupElement w = rel == pres_.commutators.end() ? identity() : element(rel->second);
      if (commutator(images[static_cast<std::size_t>(j)], gi) != aut.map_[w.index])
        throw RelationViolation("image violates commutator relation [g" + std::to_string(j + 1) +
                                ",g" + std::to_string(i + 1) + "]");
    }
  }
  return aut;
}

}  // namespace socle
