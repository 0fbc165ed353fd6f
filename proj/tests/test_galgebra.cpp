#include "doctest.h"

#include <random>

#include "socle/galgebra.hpp"

using namespace socle;

namespace {

// Coefficients of prod_j (1 + t^r + ... + t^((p-1) r)) over the given degrees.
std::vector<std::size_t> truncated_poly_counts(int p, const std::vector<int>& degrees) {
  std::vector<std::size_t> c{1};
  for (int r : degrees) {
    std::vector<std::size_t> next(c.size() + static_cast<std::size_t>((p - 1) * r), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int e = 0; e < p; ++e) next[i + static_cast<std::size_t>(e * r)] += c[i];
    c = next;
  }
  return c;
}

AlgebraElement random_element(const GroupAlgebra& kg, std::mt19937_64& rng) {
  auto a = kg.zero();
  for (auto& c : a.coeffs()) c = kg.field().from_index(rng() % kg.field().q());
  return a;
}

}  // namespace

TEST_CASE("small products") {
  const GroupAlgebra c2(catalog("C2"), FieldSpec::get(2));
  const auto g = c2.basis(c2.group().generator(0));
  const auto x = c2.one() + g;
  CHECK(c2.multiply(x, x).is_zero());

  const GroupAlgebra c3(catalog("C3"), FieldSpec::get(3));
  const auto y = c3.minus_one(c3.group().generator(0));
  CHECK(c3.multiply(y, y) == c3.parse("g1^2 + g1 + 1"));
}

TEST_CASE("group sum annihilates J on every catalog group") {
  for (const auto& name : catalog_names()) {
    const auto G = catalog(name);
    const GroupAlgebra kg(G, FieldSpec::get(G->p()));
    const auto n = kg.group_sum();
    for (auto g : G->elements()) {
      CHECK(kg.multiply(n, kg.minus_one(g)).is_zero());
      CHECK(kg.multiply(kg.minus_one(g), n).is_zero());
    }
  }
}

TEST_CASE("multiplication is associative and bilinear") {
  std::mt19937_64 rng(5);
  const GroupAlgebra kg(catalog("Q8"), FieldSpec::get(2, 2));
  for (int it = 0; it < 10; ++it) {
    const auto a = random_element(kg, rng), b = random_element(kg, rng), c = random_element(kg, rng);
    CHECK(kg.multiply(kg.multiply(a, b), c) == kg.multiply(a, kg.multiply(b, c)));
    CHECK(kg.multiply(a, b + c) == kg.multiply(a, b) + kg.multiply(a, c));
    CHECK(kg.augmentation(kg.multiply(a, b)) == kg.augmentation(a) * kg.augmentation(b));
  }
}

TEST_CASE("radical filtration of C_p matches the truncated polynomial ring") {
  for (int p : {2, 3, 5}) {
    const auto G = catalog("C" + std::to_string(p));
    const GroupAlgebra kg(G, FieldSpec::get(p));
    const RadicalFiltration jf(kg);
    // Oracle: span{(g-1)^i : i >= r} in one variable.
    const auto x = kg.minus_one(G->generator(0));
    for (int r = 0; r <= p; ++r) {
      EchelonBasis span(kg.field(), kg.dim());
      for (int i = r; i < p; ++i) span.insert(kg.power(x, i).coeffs());
      CHECK(span.dimension() == static_cast<std::size_t>(p - r));
      CHECK(jf.power(r).dimension() == static_cast<std::size_t>(p - r));
    }
    CHECK(jf.socle_degree() == p - 1);
  }
}

TEST_CASE("radical filtration of D8 over GF(2)") {
  const GroupAlgebra kg(catalog("D8"), FieldSpec::get(2));
  const RadicalFiltration jf(kg);
  // (1+t)^2 (1+t^2) = 1 + 2t + 2t^2 + 2t^3 + t^4
  const auto gr = truncated_poly_counts(2, {1, 1, 2});
  CHECK(gr == std::vector<std::size_t>{1, 2, 2, 2, 1});
  CHECK(jf.graded_dimensions() == gr);
  CHECK(jf.dimensions() == std::vector<std::size_t>{8, 7, 5, 3, 1, 0});
  CHECK(jf.socle_degree() == 4);
}

TEST_CASE("elementary abelian socle degree") {
  for (const char* name : {"C2xC2xC2", "C3xC3", "C5xC5xC5"}) {
    const auto G = catalog(name);
    const GroupAlgebra kg(G, FieldSpec::get(G->p(), 2));
    const RadicalFiltration jf(kg);
    CHECK(jf.socle_degree() == G->m() * (G->p() - 1));
    CHECK(jf.power(jf.socle_degree()).dimension() == 1);
  }
}

TEST_CASE("socle vector and socle dimension") {
  const GroupAlgebra c2(catalog("C2"), FieldSpec::get(2));
  const RadicalFiltration jf2(c2);
  CHECK(socle_vector(c2, jf2) == c2.parse("1 + g1"));

  for (const auto& name : catalog_names()) {
    const auto G = catalog(name);
    const GroupAlgebra kg(G, FieldSpec::get(G->p()));
    const RadicalFiltration jf(kg);
    CHECK(socle_vector(kg, jf) == kg.group_sum());
    CHECK(socle_basis(kg).size() == 1);
  }
}

TEST_CASE("definitional dimension subgroups") {
  const auto c4 = catalog("C4");
  const GroupAlgebra kg(c4, FieldSpec::get(2));
  const RadicalFiltration jf(kg);
  const auto x = kg.minus_one(c4->generator(0));
  CHECK(kg.multiply(x, x) == kg.minus_one(c4->generator(1)));
  const auto f = dimension_subgroups_definitional(kg, jf);
  REQUIRE(f.size() == 3);
  CHECK(f[1].elements() == std::vector<GroupElement>{c4->identity(), c4->generator(1)});
  CHECK(f == c4->jennings_series_recursive());

  for (const char* name : {"C2xC2", "C3xC3xC3", "C5xC5"}) {
    const auto G = catalog(name);
    const GroupAlgebra ea(G, FieldSpec::get(G->p()));
    const auto fe = dimension_subgroups_definitional(ea, RadicalFiltration(ea));
    REQUIRE(fe.size() == 2);
    CHECK(fe[1].is_trivial());
  }

  const auto d8 = catalog("D8");
  const GroupAlgebra kd(d8, FieldSpec::get(2, 2));
  const auto fd = dimension_subgroups_definitional(kd, RadicalFiltration(kd));
  CHECK(fd == d8->jennings_series_recursive());
  CHECK(fd[1].elements() == std::vector<GroupElement>{d8->identity(), d8->generator(2)});
}

TEST_CASE("gr coordinates and valuation") {
  const auto d8 = catalog("D8");
  const GroupAlgebra kg(d8, FieldSpec::get(2));
  const RadicalFiltration jf(kg);
  CHECK_THROWS_AS(jf.gr_coordinates(kg.one(), 1), FiltrationError);
  CHECK_THROWS_AS(jf.gr_coordinates(kg.minus_one(d8->generator(0)), 2), FiltrationError);
  CHECK(jf.valuation(kg.minus_one(d8->generator(2))) == 2);
  CHECK(jf.valuation(kg.zero()) == jf.socle_degree() + 1);
  CHECK(jf.valuation(kg.group_sum()) == jf.socle_degree());
  const auto c = jf.gr_coordinates(kg.minus_one(d8->generator(0)), 1);
  CHECK(c.size() == 2);
  CHECK_FALSE(is_zero(c));
  // Coordinates are additive modulo the next layer.
  const auto a = kg.minus_one(d8->generator(0));
  const auto b = kg.minus_one(d8->generator(1));
  auto sum = jf.gr_coordinates(a, 1);
  const auto cb = jf.gr_coordinates(b, 1);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += cb[i];
  CHECK(jf.gr_coordinates(kg.multiply(kg.basis(d8->generator(0)), kg.basis(d8->generator(1))) - kg.one(), 1) == sum);
  // The valuation agrees with repeated membership tests.
  std::mt19937_64 rng(9);
  for (int it = 0; it < 30; ++it) {
    const auto v = random_element(kg, rng);
    int r = 0;
    while (r <= jf.socle_degree() && jf.contains(v, r + 1)) ++r;
    if (v.is_zero()) r = jf.socle_degree() + 1;
    CHECK(jf.valuation(v) == r);
  }
}

TEST_CASE("units are exactly the elements of nonzero augmentation") {
  std::mt19937_64 rng(21);
  for (const char* name : {"D8", "Heis27", "C25"}) {
    const auto G = catalog(name);
    const GroupAlgebra kg(G, FieldSpec::get(G->p(), 2));
    for (int it = 0; it < 8; ++it) {
      const auto a = random_element(kg, rng);
      // Oracle: left multiplication by a is invertible as a linear map.
      std::vector<Vector> cols;
      for (auto g : G->elements()) cols.push_back(kg.multiply(a, kg.basis(g)).coeffs());
      const bool invertible = rank(Matrix::from_columns(kg.field(), kg.dim(), cols)) == kg.dim();
      CHECK(invertible == !kg.augmentation(a).is_zero());
      if (invertible) {
        const auto inv = kg.inverse(a);
        CHECK(kg.multiply(a, inv) == kg.one());
        CHECK(kg.multiply(inv, a) == kg.one());
      } else {
        CHECK_THROWS_AS(kg.inverse(a), NotAUnit);
      }
    }
  }
}

TEST_CASE("algebra literal grammar") {
  const auto d8 = catalog("D8");
  const GroupAlgebra kg(d8, FieldSpec::get(2, 2));
  const auto a = kg.parse("1 + (t+1)*g1*g2");
  CHECK(a[d8->identity()] == kg.field().one());
  CHECK(a[d8->parse_word("g1 g2")] == kg.field().parse("t+1"));
  CHECK(kg.parse(kg.format(a)) == a);
  CHECK(kg.format(kg.parse("g2*g1")) == "g1*g2*g3");
  CHECK(kg.parse("(g1 - 1)^2").is_zero());
  CHECK(kg.multiply(kg.parse("(1 + g1 + g2)^-1"), kg.parse("1 + g1 + g2")) == kg.one());
  CHECK_THROWS_AS(kg.parse("x1"), ParseError);
  CHECK_THROWS_AS(GroupAlgebra(d8, FieldSpec::get(3)), DomainError);
}

TEST_CASE("products agree with the defining convolution") {
  std::mt19937_64 rng(8);
  for (int n : {2, 6}) {
    const GroupAlgebra kg(catalog("Heis27"), FieldSpec::get(3, n));
    const auto a = random_element(kg, rng);
    const auto b = random_element(kg, rng);
    auto expect = kg.zero();
    for (auto g : kg.group().elements())
      for (auto h : kg.group().elements()) expect[kg.group().multiply(g, h)] += a[g] * b[h];
    CHECK(kg.multiply(a, b) == expect);
  }
}
