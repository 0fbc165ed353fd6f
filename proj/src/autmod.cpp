#include "socle/autmod.hpp"

namespace socle {

AlgebraAutomorphism::AlgebraAutomorphism(const GroupAlgebra& kg, Matrix matrix, std::string provenance)
    : kg_(kg), matrix_(std::move(matrix)), provenance_(std::move(provenance)) {
  if (matrix_.rows() != kg.dim() || matrix_.cols() != kg.dim())
    throw DimensionMismatch("automorphism matrix must be " + std::to_string(kg.dim()) + "x" +
                            std::to_string(kg.dim()));
  if (&matrix_.field() != &kg.field()) throw FieldMismatch("automorphism matrix over the wrong field");
}

AlgebraElement AlgebraAutomorphism::image(GroupElement g) const {
  return AlgebraElement(matrix_.column(g.index));
}

AlgebraElement AlgebraAutomorphism::operator()(const AlgebraElement& x) const {
  return AlgebraElement(matrix_ * x.coeffs());
}

AlgebraAutomorphism from_group_automorphism(const GroupAlgebra& kg, const GroupAutomorphism& sigma,
                                            std::string provenance) {
  Matrix m(kg.field(), kg.dim(), kg.dim());
  for (auto g : kg.group().elements()) m(sigma(g).index, g.index) = kg.field().one();
  return AlgebraAutomorphism(kg, std::move(m), std::move(provenance));
}

AlgebraAutomorphism from_generator_images(const GroupAlgebra& kg, const std::vector<AlgebraElement>& images,
                                          std::string provenance) {
  const auto& G = kg.group();
  if (images.size() != static_cast<std::size_t>(G.m()))
    throw DimensionMismatch("need one image per pc generator");
  const std::size_t n = kg.dim();
  std::vector<Vector> cols;
  cols.reserve(n);
  cols.push_back(kg.one().coeffs());
  // Index g = e_1 + e_2 p + ...; dropping one factor of the last generator
  // present gives a smaller index, and g = g' g_k holds in normal form.
  for (std::uint32_t g = 1; g < n; ++g) {
    const auto e = G.exponents({g});
    std::size_t k = e.size() - 1;
    while (e[k] == 0) --k;
    std::uint32_t step = 1;
    for (std::size_t i = 0; i < k; ++i) step *= static_cast<std::uint32_t>(G.p());
    cols.push_back(kg.multiply(AlgebraElement(cols[g - step]), images[k]).coeffs());
  }
  return AlgebraAutomorphism(kg, Matrix::from_columns(kg.field(), n, cols), std::move(provenance));
}

AlgebraAutomorphism inner(const GroupAlgebra& kg, const AlgebraElement& u) {
  const auto uinv = kg.inverse(u);
  const std::size_t n = kg.dim();
  std::vector<Vector> cols;
  cols.reserve(n);
  for (std::uint32_t g = 0; g < n; ++g) cols.push_back(kg.multiply(kg.right_translate(u, {g}), uinv).coeffs());
  return AlgebraAutomorphism(kg, Matrix::from_columns(kg.field(), n, cols), "inner: " + kg.format(u));
}

bool is_elementary_abelian(const PcGroup& g) {
  return g.frattini().is_trivial();
}

AlgebraAutomorphism elementary_abelian_substitution(const GroupAlgebra& kg, const RadicalFiltration& jf,
                                                    const Matrix& linear,
                                                    const std::vector<AlgebraElement>& higher) {
  const auto& G = kg.group();
  const auto m = static_cast<std::size_t>(G.m());
  if (!is_elementary_abelian(G)) throw DomainError("substitutions need an elementary abelian group");
  if (linear.rows() != m || linear.cols() != m)
    throw DimensionMismatch("linear part must be " + std::to_string(m) + "x" + std::to_string(m));
  if (&linear.field() != &kg.field()) throw FieldMismatch("linear part over the wrong field");
  if (determinant(linear).is_zero()) throw SingularLinearPart("linear part of the substitution is singular");
  if (!higher.empty() && higher.size() != m) throw DimensionMismatch("need one tail per generator");

  std::vector<AlgebraElement> images;
  for (std::size_t i = 0; i < m; ++i) {
    auto f = kg.one();
    for (std::size_t j = 0; j < m; ++j) f += linear(i, j) * kg.minus_one(G.generator(static_cast<int>(j)));
    if (!higher.empty()) {
      if (!jf.contains(higher[i], 2))
        throw FiltrationError("tail of x" + std::to_string(i + 1) + " is not in J^2");
      f += higher[i];
    }
    images.push_back(std::move(f));
  }
  return from_generator_images(kg, images, "subst");
}

AlgebraAutomorphism compose(const AlgebraAutomorphism& alpha, const AlgebraAutomorphism& beta) {
  if (&alpha.algebra().field() != &beta.algebra().field() ||
      alpha.algebra().group_ptr() != beta.algebra().group_ptr())
    throw FieldMismatch("cannot compose automorphisms of different algebras");
  return AlgebraAutomorphism(alpha.algebra(), alpha.matrix() * beta.matrix(),
                             "compose: " + alpha.provenance() + " ; " + beta.provenance());
}

std::string ValidationResult::describe() const {
  switch (mode) {
    case ValidationMode::Exact:
      return "exact";
    case ValidationMode::AllPairs:
      return "all-pairs";
    case ValidationMode::Sampled:
      return "sampled(" + std::to_string(pairs_checked) + " pairs)";
  }
  return "?";
}

namespace {

void check_pair(const AlgebraAutomorphism& alpha, GroupElement g, GroupElement h) {
  const auto& kg = alpha.algebra();
  const auto& G = kg.group();
  if (kg.multiply(alpha.image(g), alpha.image(h)) != alpha.image(G.multiply(g, h)))
    throw NotMultiplicative("alpha(" + G.format(g) + ") alpha(" + G.format(h) + ") != alpha(" +
                            G.format(G.multiply(g, h)) + ")");
}

}  // namespace

ValidationResult validate(const AlgebraAutomorphism& alpha, ValidationMode mode, std::uint64_t seed) {
  const auto& kg = alpha.algebra();
  const auto& G = kg.group();
  ValidationResult res;
  res.mode = mode;
  if (alpha.image(G.identity()) != kg.one()) throw NotMultiplicative("alpha(1) != 1");

  if (mode == ValidationMode::AllPairs && G.order() > kFullPairLimit) mode = res.mode = ValidationMode::Sampled;
  switch (mode) {
    case ValidationMode::Exact:
      // Every element is a positive word in the generating set, so this
      // forces alpha(g h) = alpha(g) alpha(h) for all g, h.
      for (auto s : G.generating_set())
        for (auto g : G.elements()) {
          check_pair(alpha, g, s);
          ++res.pairs_checked;
        }
      break;
    case ValidationMode::AllPairs:
      for (auto g : G.elements())
        for (auto h : G.elements()) {
          check_pair(alpha, g, h);
          ++res.pairs_checked;
        }
      break;
    case ValidationMode::Sampled: {
      Rng rng(seed);
      for (std::size_t i = 0; i < 10 * G.order(); ++i) {
        GroupElement g{static_cast<std::uint32_t>(rng() % G.order())};
        GroupElement h{static_cast<std::uint32_t>(rng() % G.order())};
        check_pair(alpha, g, h);
        ++res.pairs_checked;
      }
      break;
    }
  }
  if (rank(alpha.matrix()) != kg.dim()) throw NotInvertible("automorphism matrix is singular");
  return res;
}

FieldElement lambda_of(const AlgebraAutomorphism& alpha) {
  const auto& kg = alpha.algebra();
  const auto image = alpha(kg.group_sum());
  const auto lambda = image.coeffs()[0];
  for (const auto& c : image.coeffs())
    if (c != lambda) throw SocleNotPreserved("alpha(n) is not a scalar multiple of n");
  if (lambda.is_zero()) throw SocleNotPreserved("alpha(n) = 0");
  return lambda;
}

void check_filtration(const AlgebraAutomorphism& alpha, const RadicalFiltration& jf) {
  const auto& basis = jf.adapted_basis();
  const auto& levels = jf.adapted_levels();
  const auto& k = alpha.algebra().field();
  std::vector<Vector> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) cols.push_back(b.coeffs());
  // Column i: adapted coordinates of alpha(b_i); its first nonzero entry
  // gives the valuation.
  const Matrix images = jf.adapted_inverse() * (alpha.matrix() * Matrix::from_columns(k, basis.size(), cols));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (levels[i] == 0) continue;
    int v = jf.socle_degree() + 1;
    for (std::size_t row = 0; row < basis.size(); ++row)
      if (!images(row, i).is_zero()) {
        v = levels[row];
        break;
      }
    if (v < levels[i])
      throw FiltrationNotPreserved("alpha maps an element of J^" + std::to_string(levels[i]) + " outside J^" +
                                   std::to_string(v + 1));
  }
}

GradedAction induced_blocks(const AlgebraAutomorphism& alpha, const JenningsBasis& jb,
                            const RadicalFiltration& jf) {
  const auto& kg = alpha.algebra();
  const auto& k = kg.field();
  GradedAction act{{}, {}, k.one()};
  for (int r = 1; r <= jb.top_degree(); ++r) {
    const auto idx = jb.layer(r);
    if (idx.empty()) {
      act.blocks.emplace_back(k, 0, 0);
      act.det_blocks.push_back(k.one());
      continue;
    }
    std::vector<Vector> lift_cols;
    for (auto j : idx) lift_cols.push_back(jb.lift_gr(j));
    const Matrix lifts = Matrix::from_columns(k, lift_cols.front().size(), lift_cols);
    Matrix block(k, idx.size(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const auto x = alpha(kg.minus_one(jb.lifts()[idx[c]]));
      Vector coords;
      try {
        coords = jf.gr_coordinates(x, r);
      } catch (const FiltrationError&) {
        throw FiltrationNotPreserved("alpha(g - 1) leaves J^" + std::to_string(r) + " for lift " +
                                     kg.group().format(jb.lifts()[idx[c]]));
      }
      const auto sol = solve(lifts, coords);
      if (!sol)
        throw LieSubspaceViolated("image of lift " + kg.group().format(jb.lifts()[idx[c]]) +
                                  " leaves the span of the degree-" + std::to_string(r) + " lifts");
      for (std::size_t i = 0; i < idx.size(); ++i) block(i, c) = (*sol)[i];
    }
    auto d = determinant(block);
    act.det_total *= d;
    act.det_blocks.push_back(std::move(d));
    act.blocks.push_back(std::move(block));
  }
  return act;
}

VerificationReport verify_theorem(const AlgebraAutomorphism& alpha, const JenningsBasis& jb,
                                  const RadicalFiltration& jf, ValidationMode mode, std::uint64_t seed) {
  const auto& k = alpha.algebra().field();
  VerificationReport rep{alpha.provenance(), "", k.one(), {{}, {}, k.one()}, k.one()};
  rep.validation = validate(alpha, mode, seed).describe();
  check_filtration(alpha, jf);
  rep.lambda = lambda_of(alpha);
  rep.action = induced_blocks(alpha, jb, jf);
  rep.det_pow = rep.action.det_total.pow(k.p() - 1);
  rep.equation_holds = rep.lambda == rep.det_pow;
  rep.in_subgroup = is_pm1_power(rep.lambda);
  rep.lambda_is_one = rep.lambda.is_one();
  return rep;
}

std::optional<GroupAutomorphism> random_group_automorphism(const PcGroup& G, Rng& rng, int attempts) {
  const auto gens = G.generating_set();
  const auto phi = G.frattini();
  std::vector<GroupElement> candidates;
  for (auto g : G.elements())
    if (!phi.contains(g)) candidates.push_back(g);
  const std::uint32_t unset = static_cast<std::uint32_t>(G.order());
  std::vector<std::uint32_t> map(G.order());
  std::vector<GroupElement> queue;
  std::vector<char> seen(G.order());

  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<GroupElement> x;
    for (std::size_t i = 0; i < gens.size(); ++i) x.push_back(candidates[rng() % candidates.size()]);
    // Extend along the Cayley graph; a conflict means no homomorphism.
    std::fill(map.begin(), map.end(), unset);
    map[0] = 0;
    queue.assign(1, G.identity());
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      const auto g = queue[qi];
      const GroupElement fg{map[g.index]};
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const auto h = G.multiply(g, gens[i]);
        const auto v = G.multiply(fg, x[i]).index;
        if (map[h.index] == unset) {
          map[h.index] = v;
          queue.push_back(h);
        } else {
          ok = map[h.index] == v;
        }
      }
    }
    if (!ok) continue;
    std::fill(seen.begin(), seen.end(), 0);
    for (auto v : map) {
      if (seen[v]) {
        ok = false;
        break;
      }
      seen[v] = 1;
    }
    if (!ok) continue;
    std::vector<GroupElement> images;
    for (int i = 0; i < G.m(); ++i) images.push_back(GroupElement{map[G.generator(i).index]});
    return G.automorphism(images);
  }
  return std::nullopt;
}

namespace {

AlgebraElement random_combination(const GroupAlgebra& kg, const EchelonBasis& space, Rng& rng) {
  auto x = kg.zero();
  for (const auto& row : space.rows()) axpy(x.coeffs(), random_element(kg.field(), rng), row);
  return x;
}

}  // namespace

AlgebraAutomorphism random_inner(const GroupAlgebra& kg, const RadicalFiltration& jf, Rng& rng) {
  return inner(kg, kg.one() + random_combination(kg, jf.power(1), rng));
}

AlgebraAutomorphism random_substitution(const GroupAlgebra& kg, const RadicalFiltration& jf, Rng& rng,
                                        bool with_tails) {
  const auto m = static_cast<std::size_t>(kg.group().m());
  const auto linear = random_invertible(kg.field(), m, rng);
  std::vector<AlgebraElement> tails;
  if (with_tails)
    for (std::size_t i = 0; i < m; ++i) tails.push_back(random_combination(kg, jf.power(2), rng));
  return elementary_abelian_substitution(kg, jf, linear, tails);
}

}  // namespace socle
