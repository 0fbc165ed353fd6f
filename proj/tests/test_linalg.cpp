#include "doctest.h"

#include <random>

#include "socle/linalg.hpp"

using namespace socle;

namespace {

Matrix random_matrix(const FieldSpec& k, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(k, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = k.from_index(rng() % k.q());
  return m;
}

// Leibniz expansion; independent of elimination.
FieldElement leibniz(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  FieldElement total = a.field().zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    FieldElement term = a.field().one();
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += (inversions % 2) ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("determinant agrees with the Leibniz formula") {
  std::mt19937_64 rng(7);
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {5, 1}, {5, 2}, {3, 6}, {2, 8}, {251, 2}}) {
    const auto& k = FieldSpec::get(p, n);
    for (std::size_t dim = 1; dim <= 5; ++dim)
      for (int it = 0; it < 20; ++it) {
        const auto m = random_matrix(k, dim, dim, rng);
        CHECK(determinant(m) == leibniz(m));
      }
  }
}

TEST_CASE("inverse, solve, nullspace and rank") {
  std::mt19937_64 rng(11);
  const auto& k = FieldSpec::get(3, 2);
  for (int it = 0; it < 30; ++it) {
    const auto m = random_matrix(k, 6, 6, rng);
    if (determinant(m).is_zero()) {
      CHECK_THROWS_AS(inverse(m), SingularMatrix);
      CHECK(rank(m) < 6);
      continue;
    }
    CHECK(rank(m) == 6);
    CHECK(m * inverse(m) == Matrix::identity(k, 6));
  }
  for (int it = 0; it < 30; ++it) {
    const auto a = random_matrix(k, 4, 7, rng);
    const auto ns = nullspace(a);
    CHECK(ns.size() == 7 - rank(a));
    for (const auto& v : ns) CHECK(is_zero(a * v));
    Vector x = zero_vector(k, 7);
    for (auto& c : x) c = k.from_index(rng() % k.q());
    const auto b = a * x;
    const auto sol = solve(a, b);
    REQUIRE(sol);
    CHECK(a * *sol == b);
  }
  Matrix z(k, 2, 2);
  z(0, 0) = k.one();
  Vector rhs{k.zero(), k.one()};
  CHECK_FALSE(solve(z, rhs));
}

TEST_CASE("echelon basis keeps a reduced row-echelon form") {
  std::mt19937_64 rng(3);
  const auto& k = FieldSpec::get(5);
  EchelonBasis e(k, 6);
  std::vector<Vector> inserted;
  for (int it = 0; it < 4; ++it) {
    Vector v = zero_vector(k, 6);
    for (auto& c : v) c = k.from_index(rng() % 5);
    inserted.push_back(v);
    e.insert(v);
  }
  for (std::size_t i = 0; i < e.dimension(); ++i)
    for (std::size_t j = 0; j < e.dimension(); ++j)
      CHECK(e.rows()[i][e.pivots()[j]] == (i == j ? k.one() : k.zero()));
  for (const auto& v : inserted) {
    CHECK(e.contains(v));
    const auto c = e.coordinates(v);
    REQUIRE(c);
    Vector back = zero_vector(k, 6);
    for (std::size_t i = 0; i < c->size(); ++i) axpy(back, (*c)[i], e.rows()[i]);
    CHECK(back == v);
  }
  CHECK_FALSE(e.insert(inserted[0]));
}

TEST_CASE("table kernels and generic arithmetic agree") {
  // GF(3^6) is too large for the lookup tables; GF(9) uses them. Compare
  // products and ranks against entry-wise sums computed by hand.
  std::mt19937_64 rng(13);
  for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 2}, {3, 6}}) {
    const auto& k = FieldSpec::get(p, n);
    const auto a = random_matrix(k, 5, 4, rng);
    const auto b = random_matrix(k, 4, 6, rng);
    const auto ab = a * b;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        auto s = k.zero();
        for (std::size_t l = 0; l < 4; ++l) s += a(i, l) * b(l, j);
        CHECK(ab(i, j) == s);
      }
    const auto v = random_matrix(k, 4, 1, rng).column(0);
    const auto av = a * v;
    for (std::size_t i = 0; i < 5; ++i) {
      auto s = k.zero();
      for (std::size_t l = 0; l < 4; ++l) s += a(i, l) * v[l];
      CHECK(av[i] == s);
    }
    auto sq = random_matrix(k, 6, 6, rng);
    while (determinant(sq).is_zero()) sq = random_matrix(k, 6, 6, rng);
    CHECK(inverse(sq) * sq == Matrix::identity(k, 6));
  }
}
