#include "socle/jennings.hpp"

#include <numeric>

namespace socle {

namespace {

int ceil_log_p(std::size_t ratio, int p) {
  int d = 0;
  std::size_t x = 1;
  while (x < ratio) {
    x *= static_cast<std::size_t>(p);
    ++d;
  }
  return d;
}

}  // namespace

JenningsBasis::JenningsBasis(const GroupAlgebra& kg, const RadicalFiltration& jf)
    : kg_(kg), series_(dimension_subgroups_definitional(kg, jf)) {
  const auto& G = kg.group();
  const int p = G.p();
  const int top = top_degree();

  for (int r = 1; r <= top; ++r) {
    const auto& fr = series_[static_cast<std::size_t>(r - 1)];
    const auto& next = series_[static_cast<std::size_t>(r)];
    const std::size_t ratio = fr.order() / next.order();
    const int d = ceil_log_p(ratio, p);
    layer_dims_.push_back(static_cast<std::size_t>(d));
    EchelonBasis chosen(kg.field(), jf.graded_dimensions()[static_cast<std::size_t>(r)]);
    for (auto g : fr.elements()) {
      if (chosen.dimension() == static_cast<std::size_t>(d)) break;
      if (next.contains(g)) continue;
      auto c = jf.gr_coordinates(kg.minus_one(g), r);
      if (chosen.insert(c)) {
        lifts_.push_back(g);
        degrees_.push_back(r);
        lift_gr_.push_back(std::move(c));
      }
    }
    if (chosen.dimension() != static_cast<std::size_t>(d))
      throw DimensionMismatch("could not find " + std::to_string(d) + " independent lifts in degree " +
                              std::to_string(r));
  }
  if (static_cast<int>(lifts_.size()) != G.m())
    throw DimensionMismatch("sum of layer dimensions " + std::to_string(lifts_.size()) +
                            " differs from m = " + std::to_string(G.m()));

  // Coset coordinate tables.
  for (int r = 1; r <= top; ++r) {
    std::vector<std::int32_t> code(G.order(), -1);
    const auto idx = layer(r);
    const auto& next = series_[static_cast<std::size_t>(r)];
    std::int32_t count = 1;
    for (std::size_t i = 0; i < idx.size(); ++i) count *= p;
    for (std::int32_t c = 0; c < count; ++c) {
      GroupElement prod = G.identity();
      std::int32_t x = c;
      for (auto j : idx) {
        prod = G.multiply(prod, G.power(lifts_[j], x % p));
        x /= p;
      }
      for (auto f : next.elements()) {
        auto& slot = code[G.multiply(prod, f).index];
        if (slot != -1) throw DimensionMismatch("degree " + std::to_string(r) + " lifts are not independent");
        slot = c;
      }
    }
    for (auto g : series_[static_cast<std::size_t>(r - 1)].elements())
      if (code[g.index] == -1) throw DimensionMismatch("degree " + std::to_string(r) + " lifts do not span");
    coord_code_.push_back(std::move(code));
  }
}

std::size_t JenningsBasis::layer_dim(int r) const {
  if (r < 1 || r > top_degree()) return 0;
  return layer_dims_[static_cast<std::size_t>(r - 1)];
}

std::vector<std::size_t> JenningsBasis::layer(int r) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < degrees_.size(); ++j)
    if (degrees_[j] == r) out.push_back(j);
  return out;
}

PrimeCoords JenningsBasis::layer_coordinates(GroupElement h, int r) const {
  if (r > top_degree()) {
    if (h != kg_.group().identity())
      throw DimensionMismatch("element " + kg_.group().format(h) + " is not in F_" + std::to_string(r));
    return {};
  }
  if (r < 1) throw DomainError("degree must be positive");
  std::int32_t code = coord_code_[static_cast<std::size_t>(r - 1)][h.index];
  if (code < 0)
    throw DimensionMismatch("element " + kg_.group().format(h) + " is not in F_" + std::to_string(r));
  const int p = kg_.group().p();
  PrimeCoords c(layer_dim(r));
  for (auto& v : c) {
    v = code % p;
    code /= p;
  }
  return c;
}

Vector JenningsBasis::embed(const PrimeCoords& coords, int r) const {
  const auto idx = layer(r);
  if (idx.empty()) return {};
  Vector out = zero_vector(kg_.field(), lift_gr_[idx[0]].size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    axpy(out, kg_.field().from_int(coords[i]), lift_gr_[idx[i]]);
  return out;
}

PrimeCoords JenningsBasis::lie_bracket(std::size_t j1, std::size_t j2) const {
  const auto& G = kg_.group();
  return layer_coordinates(G.commutator(lifts_[j1], lifts_[j2]), degrees_[j1] + degrees_[j2]);
}

PrimeCoords JenningsBasis::p_restriction(std::size_t j) const {
  const auto& G = kg_.group();
  return layer_coordinates(G.power(lifts_[j], G.p()), G.p() * degrees_[j]);
}

std::vector<PbwMonomial> JenningsBasis::pbw_monomials() const {
  const int p = kg_.group().p();
  const std::size_t m = lifts_.size();
  std::vector<PbwMonomial> out;
  std::vector<int> e(m, 0);
  for (;;) {
    PbwMonomial mono{e, 0, 0};
    for (std::size_t j = 0; j < m; ++j) {
      mono.degree += e[j] * degrees_[j];
      mono.length += e[j];
    }
    out.push_back(std::move(mono));
    std::size_t k = m;
    while (k > 0 && e[k - 1] == p - 1) e[--k] = 0;
    if (k == 0) break;
    ++e[k - 1];
  }
  return out;
}

std::size_t JenningsBasis::pbw_dimension(int r) const {
  std::size_t n = 0;
  for (const auto& mono : pbw_monomials()) n += (mono.degree == r);
  return n;
}

std::vector<std::size_t> JenningsBasis::pbw_dimensions() const {
  std::vector<std::size_t> d(static_cast<std::size_t>(predicted_socle_degree()) + 1, 0);
  for (const auto& mono : pbw_monomials()) ++d[static_cast<std::size_t>(mono.degree)];
  return d;
}

int JenningsBasis::predicted_socle_degree() const {
  return (kg_.group().p() - 1) * std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

GroupElement JenningsBasis::ordered_product(const std::vector<int>& exponents) const {
  const auto& G = kg_.group();
  GroupElement x = G.identity();
  for (std::size_t j = 0; j < lifts_.size(); ++j) x = G.multiply(x, G.power(lifts_[j], exponents[j]));
  return x;
}

bool JenningsBasis::normal_forms_biject() const {
  std::vector<char> hit(kg_.group().order(), 0);
  std::size_t distinct = 0;
  for (const auto& mono : pbw_monomials()) {
    auto& h = hit[ordered_product(mono.exponents).index];
    if (!h) {
      h = 1;
      ++distinct;
    }
  }
  return distinct == kg_.group().order();
}

std::vector<std::size_t> JenningsBasis::restricted_closure_dims() const {
  const auto& G = kg_.group();
  const int top = top_degree();
  const auto& fp = FieldSpec::get(G.p());
  std::vector<EchelonBasis> spans;
  std::vector<std::vector<GroupElement>> reps(static_cast<std::size_t>(top));
  for (int r = 1; r <= top; ++r) spans.emplace_back(fp, layer_dim(r));

  bool changed = false;
  auto add = [&](GroupElement h, int r) {
    if (r > top || layer_dim(r) == 0) return;
    const auto c = layer_coordinates(h, r);
    Vector v;
    for (int x : c) v.push_back(fp.from_int(x));
    if (spans[static_cast<std::size_t>(r - 1)].insert(v)) {
      reps[static_cast<std::size_t>(r - 1)].push_back(h);
      changed = true;
    }
  };
  for (auto j : layer(1)) add(lifts_[j], 1);
  do {
    changed = false;
    const auto snapshot = reps;
    for (int r1 = 1; r1 <= top; ++r1)
      for (auto a : snapshot[static_cast<std::size_t>(r1 - 1)]) {
        add(G.power(a, G.p()), G.p() * r1);
        for (int r2 = 1; r1 + r2 <= top; ++r2)
          for (auto b : snapshot[static_cast<std::size_t>(r2 - 1)]) add(G.commutator(a, b), r1 + r2);
      }
  } while (changed);

  std::vector<std::size_t> dims;
  for (const auto& s : spans) dims.push_back(s.dimension());
  return dims;
}

JqReport jq_dimension_check(const JenningsBasis& jb, const RadicalFiltration& jf) {
  JqReport rep;
  rep.gr_dims = jf.graded_dimensions();
  rep.pbw_dims = jb.pbw_dimensions();
  rep.socle_degree = jf.socle_degree();
  rep.predicted_socle_degree = jb.predicted_socle_degree();
  rep.total = std::accumulate(rep.gr_dims.begin(), rep.gr_dims.end(), std::size_t{0});
  const auto& G = jb.algebra().group();
  if (rep.gr_dims != rep.pbw_dims)
    throw DimensionMismatch("dim gr_r(kG) differs from the PBW monomial count");
  if (rep.socle_degree != rep.predicted_socle_degree)
    throw DimensionMismatch("socle degree " + std::to_string(rep.socle_degree) + " differs from (p-1) sum r d_r = " +
                            std::to_string(rep.predicted_socle_degree));
  const auto m = std::accumulate(jb.layer_dims().begin(), jb.layer_dims().end(), std::size_t{0});
  if (m != static_cast<std::size_t>(G.m())) throw DimensionMismatch("sum of d_r differs from m");
  if (rep.total != G.order()) throw DimensionMismatch("total graded dimension differs from p^m");
  return rep;
}

AlgebraElement ordered_socle_product(const JenningsBasis& jb) {
  const auto& kg = jb.algebra();
  const int p = kg.group().p();
  auto acc = kg.one();
  for (auto g : jb.lifts()) acc = kg.multiply(acc, kg.power(kg.minus_one(g), p - 1));
  return acc;
}

}  // namespace socle
