#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "socle/verify.hpp"

using namespace socle;

namespace {

RunConfig config_for(const std::string& group, const std::string& field, std::vector<std::string> autos) {
  RunConfig c;
  c.group = group;
  c.field = &parse_field_choice(field);
  c.autos = std::move(autos);
  return c;
}

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "none";
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("field choices") {
  CHECK(&parse_field_choice("3") == &FieldSpec::get(3));
  CHECK(&parse_field_choice("3,2") == &FieldSpec::get(3, 2));
  const auto& k = parse_field_choice("3, 2, t^2 + 2*t + 2");
  CHECK(k.q() == 9);
  CHECK(k.modulus() == std::vector<int>{2, 2, 1});
  CHECK_THROWS_AS(parse_field_choice("4"), ConfigError);
  CHECK_THROWS_AS(parse_field_choice("3,2,t^2"), ConfigError);
  CHECK_THROWS_AS(parse_field_choice("3,2,t^3+1"), ConfigError);
  CHECK_THROWS_AS(parse_field_choice("x"), ConfigError);
}

TEST_CASE("master seed from the environment") {
  ::unsetenv(kSeedEnvVar);
  CHECK(default_master_seed() == 0xB50C1EULL);
  ::setenv(kSeedEnvVar, "0x10", 1);
  CHECK(default_master_seed() == 16);
  ::setenv(kSeedEnvVar, "seven", 1);
  CHECK_THROWS_AS(default_master_seed(), ConfigError);
  ::unsetenv(kSeedEnvVar);
}

TEST_CASE("documented runs") {
  {
    const auto r = run(config_for("D8", "2", {"group-auto: g1 -> g1 g3, g2 -> g2"}));
    REQUIRE(r.autos.size() == 1);
    CHECK(r.autos[0].lambda.is_one());
    CHECK(r.verdict);
  }
  {
    const auto r = run(config_for("C3xC3", "3,2", {"subst: x1 -> (t)*x1, x2 -> x2"}));
    const auto& k = FieldSpec::get(3, 2);
    REQUIRE(r.autos.size() == 1);
    CHECK(r.autos[0].lambda == k.t() * k.t());
    CHECK(r.autos[0].det_pow == k.t() * k.t());
    CHECK(r.autos[0].action.det_total == k.t());
    CHECK(r.verdict);
  }
  {
    const auto r = run(config_for("Q8", "2", {}));
    CHECK(r.autos.empty());
    CHECK(r.verdict);
    CHECK(r.gr_dims == r.pbw_dims);
    CHECK(r.jennings.size() == 2);
    CHECK(r.jennings[0].order == 8);
    CHECK(r.jennings[1].lifts == std::vector<std::string>{"g3"});
  }
}

TEST_CASE("spec grammar") {
  const CaseContext ctx(catalog("C3xC3"), FieldSpec::get(3, 2));
  const auto& k = ctx.kg.field();

  SUBCASE("unlisted generators are fixed") {
    const auto a = build_automorphism(ctx, "group-auto: g1 -> g1^2");
    CHECK(a.image(ctx.kg.group().generator(1)) == ctx.kg.basis(ctx.kg.group().generator(1)));
  }
  SUBCASE("compose applies the right spec first") {
    const std::string s1 = "subst: x1 -> (t)*x1 + x2, x2 -> x2";
    const std::string s2 = "group-auto: g1 -> g2, g2 -> g1";
    const auto a = build_automorphism(ctx, s1);
    const auto b = build_automorphism(ctx, s2);
    const auto c = build_automorphism(ctx, "compose: " + s1 + " ; " + s2);
    CHECK(c.matrix() == a.matrix() * b.matrix());
    CHECK_FALSE(c.matrix() == b.matrix() * a.matrix());
    CHECK(c.provenance() == "compose: " + s1 + " ; " + s2);
  }
  SUBCASE("substitution tails") {
    const auto plain = build_automorphism(ctx, "subst: x1 -> 2*x1, x2 -> x1 + x2");
    const auto tailed = build_automorphism(ctx, "subst: x1 -> 2*x1 + x1 x2 + (t+1)*x2^2, x2 -> x1 + x2 - x1^2");
    CHECK_NOTHROW(validate(tailed));
    CHECK(lambda_of(plain) == lambda_of(tailed));
    CHECK_FALSE(plain.matrix() == tailed.matrix());
    // x1 -> 2 x1 means g1 -> 1 + 2 (g1 - 1) = 2 g1 + 2 = 2 g1 - 1.
    const auto g1 = ctx.kg.group().generator(0);
    CHECK(plain.image(g1) == ctx.kg.parse("2*g1 + 2"));
  }
  SUBCASE("random specs are reproducible") {
    const auto a = build_automorphism(ctx, "random-subst seed=5");
    const auto b = build_automorphism(ctx, "random-subst seed=5");
    const auto c = build_automorphism(ctx, "random-subst seed=6");
    CHECK(a.matrix() == b.matrix());
    CHECK_FALSE(a.matrix() == c.matrix());
    CHECK(a.provenance() == "random-subst seed=5");
    const auto d = build_automorphism(ctx, "random-inner", 99);
    CHECK(d.provenance() == "random-inner seed=99");
  }
  SUBCASE("spec files") {
    const auto path = temp_file("socle_spec_test.txt", "# swap\ngroup-auto: g1 -> g2,\n  g2 -> g1\n");
    const auto a = build_automorphism(ctx, "@" + path.string());
    CHECK(a.provenance() == "group-auto: g1 -> g2, g2 -> g1");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(build_automorphism(ctx, "@/nonexistent/spec"), ConfigError);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(build_automorphism(ctx, "rotate: g1"), ParseError);
    CHECK_THROWS_AS(build_automorphism(ctx, "subst: x1 -> 1 + x1"), ParseError);
    CHECK_THROWS_AS(build_automorphism(ctx, "subst: x3 -> x1"), ParseError);
    CHECK_THROWS_AS(build_automorphism(ctx, "subst: x1 -> x2, x2 -> x2"), SingularLinearPart);
    CHECK_THROWS_AS(build_automorphism(ctx, "group-auto: g1 -> g2, g1 -> g1"), ParseError);
    CHECK_THROWS_AS(build_automorphism(ctx, "group-auto: g1 -> g2, g2 -> g2"), NotBijective);
    CHECK_THROWS_AS(build_automorphism(ctx, "inner: g1 - g2"), NotAUnit);
    CHECK_THROWS_AS(build_automorphism(ctx, "random-inner sead=3"), ParseError);
    (void)k;
  }
}

TEST_CASE("run reports failing stages") {
  CHECK(kind_of([] { run(config_for("D8", "2", {"subst: x1 -> x1"})); }) == std::string("DomainError"));
  try {
    run(config_for("C4", "2", {"group-auto: g1 -> g2"}));
    FAIL("expected an error");
  } catch (const StageError& e) {
    CHECK(std::string(e.kind()) == "NotBijective");
    CHECK(e.stage().find("automorphism spec") == 0);
  }
  CHECK_THROWS_AS(run(config_for("D8", "3", {})), ConfigError);
  RunConfig missing;
  missing.group = "NoSuchGroup";
  CHECK(kind_of([&] { run(missing); }) == std::string("UnknownGroup"));
}

TEST_CASE("groups from presentation files") {
  const auto path = temp_file("socle_d8.pc", "pcgroup p=2 m=3 name=dihedral\ng2^2 = g3\n[g2,g1] = g3\n");
  RunConfig c;
  c.group = path.string();
  c.autos = {"random-group-auto seed=1", "random-inner seed=2"};
  const auto r = run(c);
  CHECK(r.order == 8);
  CHECK(r.gr_dims == std::vector<std::size_t>{1, 2, 2, 2, 1});
  CHECK(r.verdict);
  std::filesystem::remove(path);
}

TEST_CASE("sweep automorphism mix") {
  for (const auto& name : {"C2xC2", "Q8", "Heis27", "C25"}) {
    const auto g = catalog(name);
    for (int n : {1, 2}) {
      const CaseContext ctx(g, FieldSpec::get(g->p(), n));
      const auto autos = sweep_automorphisms(ctx, 1234);
      CHECK(autos.size() >= 50);
      const auto again = sweep_automorphisms(ctx, 1234);
      REQUIRE(again.size() == autos.size());
      for (std::size_t i = 0; i < autos.size(); ++i) CHECK(autos[i].matrix() == again[i].matrix());
    }
  }
}

TEST_CASE("reports serialize with a fixed key order") {
  auto c = config_for("C2xC2", "2,2", {"random-subst seed=3", "identity"});
  c.full_check = true;
  const auto r = run(c);
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"group", "field", "jennings", "gr_dims", "socle_degree", "autos", "verdict"});
  std::vector<std::string> auto_keys;
  for (const auto& [key, value] : j["autos"][0].items()) auto_keys.push_back(key);
  CHECK(auto_keys == std::vector<std::string>{"provenance", "lambda", "det_blocks", "det_total", "det_pow",
                                              "equation_holds", "in_subgroup", "lambda_is_one"});
  CHECK(j["field"]["modulus"] == "t^2+t+1");
  CHECK(j["autos"][0]["provenance"] == "random-subst seed=3 [validated: all-pairs]");
  CHECK(j["autos"][1]["lambda"] == "1");
  CHECK(to_json(run(c)).dump() == j.dump());

  const auto jj = jennings_json(r);
  CHECK(jj["layers"][0]["d_r"] == 2);
  CHECK(jj["socle_degree"] == 2);
  CHECK(to_text(r).find("verdict: PASS") != std::string::npos);
}

TEST_CASE("gl check") {
  for (int p : {2, 3, 5})
    for (int m : {1, 2, 3}) {
      const auto g = gl_check(p, 1, m, 20, 9);
      CHECK(g.passed());
      const auto q = static_cast<std::size_t>(p);
      CHECK(g.generators_checked == (q - 1) * static_cast<std::size_t>(m * m));
      CHECK(g.random_checked == 20);
    }
  CHECK(gl_check(3, 2, 2, 10, 1).passed());
  CHECK_THROWS_AS(gl_check(4, 1, 2, 1, 1), ConfigError);
  CHECK_THROWS_AS(gl_check(2, 1, 0, 1, 1), ConfigError);
}
