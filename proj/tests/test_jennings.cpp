#include "doctest.h"

#include "socle/jennings.hpp"

using namespace socle;

namespace {

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

struct Fixture {
  GroupAlgebra kg;
  RadicalFiltration jf;
  JenningsBasis jb;
  Fixture(const std::string& name, int n = 1)
      : kg(catalog(name), FieldSpec::get(catalog(name)->p(), n)), jf(kg), jb(kg, jf) {}
};

std::vector<std::string> words(const JenningsBasis& jb) {
  std::vector<std::string> out;
  for (auto g : jb.lifts()) out.push_back(jb.algebra().group().format(g));
  return out;
}

}  // namespace

TEST_CASE("lift selection on small groups") {
  {
    Fixture f("C3");
    CHECK(words(f.jb) == std::vector<std::string>{"g1"});
    CHECK(f.jb.degrees() == std::vector<int>{1});
  }
  {
    Fixture f("C4");
    CHECK(words(f.jb) == std::vector<std::string>{"g1", "g2"});
    CHECK(f.jb.degrees() == std::vector<int>{1, 2});
  }
  {
    Fixture f("D8");
    CHECK(words(f.jb) == std::vector<std::string>{"g1", "g2", "g3"});
    CHECK(f.jb.degrees() == std::vector<int>{1, 1, 2});
    CHECK(f.jb.layer_dims() == std::vector<std::size_t>{2, 1});
  }
  {
    // C8: F_3 = F_4, so degree 3 is an empty layer.
    Fixture f("C8");
    CHECK(f.jb.degrees() == std::vector<int>{1, 2, 4});
    CHECK(f.jb.layer_dims() == std::vector<std::size_t>{1, 1, 0, 1});
  }
}

TEST_CASE("brackets and restrictions on named examples") {
  {
    Fixture f("D8");
    CHECK(f.jb.lie_bracket(1, 0) == PrimeCoords{1});
    CHECK(f.jb.lie_bracket(0, 1) == PrimeCoords{1});  // -1 = 1 mod 2
    CHECK(f.jb.lie_bracket(0, 0) == PrimeCoords{0});
    CHECK(f.jb.p_restriction(0) == PrimeCoords{0});
    CHECK(f.jb.p_restriction(1) == PrimeCoords{1});
    CHECK(f.jb.lie_bracket(0, 2).empty());  // degree 3 > top
  }
  {
    Fixture f("C4");
    CHECK(f.jb.p_restriction(0) == PrimeCoords{1});
  }
  {
    Fixture f("Q8");
    const auto& G = f.kg.group();
    CHECK(f.jb.p_restriction(0) == PrimeCoords{1});
    // g3 spans the center.
    for (auto g : G.elements()) CHECK(G.multiply(g, f.jb.lifts()[2]) == G.multiply(f.jb.lifts()[2], g));
  }
  {
    Fixture f("Heis27");
    CHECK(f.jb.degrees() == std::vector<int>{1, 1, 2});
    CHECK(f.jb.lie_bracket(1, 0) == PrimeCoords{1});
    CHECK(f.jb.lie_bracket(0, 1) == PrimeCoords{2});
    CHECK(f.jb.lie_bracket(0, 0) == PrimeCoords{0});
    CHECK(f.jb.lie_bracket(1, 1) == PrimeCoords{0});
  }
}

TEST_CASE("abelian groups have zero brackets, elementary abelian zero restrictions") {
  for (const auto& name : catalog_names()) {
    Fixture f(name);
    const auto& G = f.kg.group();
    bool abelian = G.commutator_subgroup(G.whole(), G.whole()).is_trivial();
    bool elementary = G.frattini().is_trivial();
    for (std::size_t a = 0; a < f.jb.size(); ++a) {
      if (elementary) {
        for (int c : f.jb.p_restriction(a)) CHECK(c == 0);
      }
      if (abelian)
        for (std::size_t b = 0; b < f.jb.size(); ++b)
          for (int c : f.jb.lie_bracket(a, b)) CHECK(c == 0);
    }
  }
}

TEST_CASE("pbw dimensions") {
  Fixture d8("D8");
  CHECK(d8.jb.pbw_dimensions() == std::vector<std::size_t>{1, 2, 2, 2, 1});
  Fixture c5("C5");
  CHECK(c5.jb.pbw_dimensions() == std::vector<std::size_t>{1, 1, 1, 1, 1});
  for (const auto& name : catalog_names()) {
    Fixture f(name);
    const int p = f.kg.group().p();
    CAPTURE(name);
    CHECK(f.jb.pbw_dimensions() == truncated_poly_counts(p, f.jb.degrees()));
    std::size_t total = 0;
    for (auto d : f.jb.pbw_dimensions()) total += d;
    CHECK(total == f.kg.group().order());
    for (const auto& mono : f.jb.pbw_monomials())
      for (int e : mono.exponents) CHECK((e >= 0 && e < p));
  }
}

TEST_CASE("jennings basis invariants on every catalog group") {
  for (const auto& name : catalog_names()) {
    for (int n : {1, 2}) {
      Fixture f(name, n);
      const auto& G = f.kg.group();
      CAPTURE(name);
      CAPTURE(n);
      CHECK(static_cast<int>(f.jb.size()) == G.m());
      CHECK(f.jb.normal_forms_biject());
      CHECK_NOTHROW(jq_dimension_check(f.jb, f.jf));
      CHECK(f.jb.series() == G.jennings_series_recursive());
      for (std::size_t j = 0; j < f.jb.size(); ++j) {
        CHECK_FALSE(f.jb.series()[static_cast<std::size_t>(f.jb.degrees()[j])].contains(f.jb.lifts()[j]));
        CHECK(f.jb.series()[static_cast<std::size_t>(f.jb.degrees()[j] - 1)].contains(f.jb.lifts()[j]));
      }
      CHECK(ordered_socle_product(f.jb) == f.kg.group_sum());
    }
  }
}

TEST_CASE("bracket and p-power compatibility with gr(kG)") {
  for (const auto& name : catalog_names()) {
    for (int n : {1, 2}) {
      Fixture f(name, n);
      const auto& kg = f.kg;
      const int p = kg.group().p();
      const int top = f.jf.socle_degree();
      CAPTURE(name);
      for (std::size_t a = 0; a < f.jb.size(); ++a) {
        const auto xa = kg.minus_one(f.jb.lifts()[a]);
        const int ra = f.jb.degrees()[a];
        for (std::size_t b = 0; b < f.jb.size(); ++b) {
          const auto xb = kg.minus_one(f.jb.lifts()[b]);
          const int R = ra + f.jb.degrees()[b];
          const auto comm = kg.multiply(xa, xb) - kg.multiply(xb, xa);
          if (R > top) {
            CHECK(comm.is_zero());
            continue;
          }
          const auto expected = f.jb.embed(f.jb.lie_bracket(a, b), R);
          const auto got = f.jf.gr_coordinates(comm, R);
          if (expected.empty())
            CHECK(is_zero(got));
          else
            CHECK(got == expected);
        }
        const int R = p * ra;
        const auto pw = kg.power(xa, p);
        if (R > top) {
          CHECK(pw.is_zero());
          continue;
        }
        const auto expected = f.jb.embed(f.jb.p_restriction(a), R);
        const auto got = f.jf.gr_coordinates(pw, R);
        if (expected.empty())
          CHECK(is_zero(got));
        else
          CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("degree-one generation reaches all of Jen") {
  for (const auto& name : catalog_names()) {
    Fixture f(name);
    CAPTURE(name);
    CHECK(f.jb.restricted_closure_dims() == f.jb.layer_dims());
  }
}

TEST_CASE("layer coordinates reject elements outside F_r") {
  Fixture f("D8");
  CHECK_THROWS_AS(f.jb.layer_coordinates(f.jb.lifts()[0], 2), DimensionMismatch);
  CHECK(f.jb.layer_coordinates(f.kg.group().identity(), 2) == PrimeCoords{0});
}
