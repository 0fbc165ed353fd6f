// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails. The path of the socle-verify binary is passed as argv[1]
// for the determinism check.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "socle/verify.hpp"

using namespace socle;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failure messages without stopping the criterion.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) messages_ += (messages_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed: " + messages_};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string messages_;
};

std::vector<const FieldSpec*> fields_for(int p, int max_n) {
  std::vector<const FieldSpec*> out;
  for (int n = 1; n <= max_n; ++n) out.push_back(&FieldSpec::get(p, n));
  return out;
}

std::string label(const std::string& group, const FieldSpec& k) { return group + "/" + k.name(); }

Outcome prime_field_sweep() {
  const auto start = std::chrono::steady_clock::now();
  const auto report = sweep(default_master_seed());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Checker c;
  std::size_t prime_autos = 0;
  for (const auto& rc : report.cases) {
    if (rc.field->n() != 1) continue;
    c.expect(rc.autos.size() >= 50, rc.group_name + " has only " + std::to_string(rc.autos.size()) + " autos");
    for (const auto& a : rc.autos) {
      ++prime_autos;
      c.expect(a.lambda.is_one(), rc.group_name + ": lambda = " + a.lambda.to_string() + " for " + a.provenance);
    }
  }
  c.expect(report.verdict, "sweep verdict is false");
  c.expect(secs <= 60.0, "full sweep took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << prime_autos << " prime-field automorphisms, full sweep " << std::fixed;
  s.precision(1);
  s << secs << " s";
  return c.outcome(s.str());
}

Outcome extension_field_substitutions() {
  Checker c;
  std::size_t total = 0;
  std::uint64_t seed = mix_seed(default_master_seed(), 2);
  for (const auto& name : catalog_names()) {
    const auto g = catalog(name);
    if (g->p() == 2 || !is_elementary_abelian(*g)) continue;
    const CaseContext ctx(g, FieldSpec::get(g->p(), 2));
    std::size_t nontrivial = 0;
    for (int i = 0; i < 100; ++i) {
      Rng rng(mix_seed(seed, total++));
      const auto a = random_substitution(ctx.kg, ctx.jf, rng);
      const auto rep = verify_theorem(a, ctx.jb, ctx.jf);
      c.expect(rep.lambda == rep.det_pow, label(name, ctx.kg.field()) + ": lambda != det^(p-1)");
      c.expect(is_pm1_power(rep.lambda), label(name, ctx.kg.field()) + ": lambda not a (p-1)th power");
      nontrivial += !rep.lambda.is_one();
    }
    c.expect(nontrivial > 0, name + ": every lambda was 1");
  }
  return c.outcome(std::to_string(total) + " substitutions over GF(9), GF(25)");
}

Outcome series_cross_validation() {
  Checker c;
  std::size_t pairs = 0;
  for (const auto& name : catalog_names()) {
    const auto g = catalog(name);
    const auto recursive = g->jennings_series_recursive();
    for (const auto* k : fields_for(g->p(), 3)) {
      const GroupAlgebra kg(g, *k);
      const RadicalFiltration jf(kg);
      c.expect(dimension_subgroups_definitional(kg, jf) == recursive, label(name, *k) + ": series differ");
    }
    c.expect(recursive.size() >= 2 && recursive[1] == g->frattini(), name + ": F_2 != Frattini subgroup");
    auto term = [&](std::size_t r) -> const Subgroup& { return recursive[std::min(r, recursive.size()) - 1]; };
    for (std::size_t r = 1; r <= recursive.size(); ++r)
      for (std::size_t s = 1; s <= recursive.size(); ++s) {
        const auto& target = term(r + s);
        bool inside = true;
        for (auto x : term(r).elements())
          for (auto y : term(s).elements()) {
            ++pairs;
            inside = inside && target.contains(g->commutator(x, y));
          }
        c.expect(inside, name + ": [F_" + std::to_string(r) + ", F_" + std::to_string(s) + "] not in F_" +
                             std::to_string(r + s));
      }
  }
  return c.outcome(std::to_string(pairs) + " commutator pairs");
}

Outcome dimension_consistency() {
  Checker c;
  for (const auto& name : catalog_names()) {
    const auto g = catalog(name);
    for (const auto* k : fields_for(g->p(), 2)) {
      const GroupAlgebra kg(g, *k);
      const RadicalFiltration jf(kg);
      const JenningsBasis jb(kg, jf);
      try {
        const auto rep = jq_dimension_check(jb, jf);
        std::size_t weighted = 0;
        for (std::size_t r = 0; r < jb.layer_dims().size(); ++r) weighted += (r + 1) * jb.layer_dims()[r];
        c.expect(rep.socle_degree == (g->p() - 1) * static_cast<int>(weighted), label(name, *k) + ": socle degree");
        c.expect(rep.total == g->order(), label(name, *k) + ": total dimension");
        for (int r = 0; r <= rep.socle_degree; ++r)
          c.expect(jf.graded_dimensions()[static_cast<std::size_t>(r)] == jb.pbw_dimension(r),
                   label(name, *k) + ": degree " + std::to_string(r));
      } catch (const DimensionMismatch& e) {
        c.expect(false, label(name, *k) + ": " + e.what());
      }
    }
  }
  return c.outcome("all catalog groups over GF(p), GF(p^2)");
}

Outcome socle_identity() {
  Checker c;
  for (const auto& name : catalog_names()) {
    const auto g = catalog(name);
    for (const auto* k : fields_for(g->p(), 2)) {
      const GroupAlgebra kg(g, *k);
      const RadicalFiltration jf(kg);
      const JenningsBasis jb(kg, jf);
      const auto basis = socle_basis(kg);
      const auto n = kg.group_sum();
      c.expect(basis.size() == 1, label(name, *k) + ": socle dimension " + std::to_string(basis.size()));
      if (basis.size() == 1) {
        EchelonBasis span(*k, kg.dim());
        span.insert(basis[0].coeffs());
        c.expect(span.contains(n.coeffs()), label(name, *k) + ": socle not spanned by n");
      }
      c.expect(ordered_socle_product(jb) == n, label(name, *k) + ": ordered product != n");
    }
  }
  return c.outcome("all catalog groups over GF(p), GF(p^2)");
}

Outcome lie_structure() {
  Checker c;
  std::size_t pairs = 0;
  for (const auto& name : catalog_names()) {
    const auto g = catalog(name);
    for (const auto* k : fields_for(g->p(), 2)) {
      const GroupAlgebra kg(g, *k);
      const RadicalFiltration jf(kg);
      const JenningsBasis jb(kg, jf);
      const int top = jf.socle_degree();
      const int p = g->p();
      auto compare = [&](const AlgebraElement& x, int degree, const PrimeCoords& coords, const std::string& what) {
        if (degree > top) {
          c.expect(x.is_zero(), label(name, *k) + ": " + what + " beyond the socle degree");
          return;
        }
        const auto expected = jb.embed(coords, degree);
        const auto got = jf.gr_coordinates(x, degree);
        c.expect(expected.empty() ? is_zero(got) : got == expected, label(name, *k) + ": " + what);
      };
      for (std::size_t a = 0; a < jb.size(); ++a) {
        const auto xa = kg.minus_one(jb.lifts()[a]);
        for (std::size_t b = 0; b < jb.size(); ++b) {
          ++pairs;
          const auto xb = kg.minus_one(jb.lifts()[b]);
          compare(kg.multiply(xa, xb) - kg.multiply(xb, xa), jb.degrees()[a] + jb.degrees()[b], jb.lie_bracket(a, b),
                  "bracket of lifts " + std::to_string(a + 1) + "," + std::to_string(b + 1));
        }
        compare(kg.power(xa, p), p * jb.degrees()[a], jb.p_restriction(a),
                "restriction of lift " + std::to_string(a + 1));
      }
      c.expect(jb.restricted_closure_dims() == jb.layer_dims(), label(name, *k) + ": closure of Jen_1 is proper");
    }
  }
  return c.outcome(std::to_string(pairs) + " lift pairs");
}

Outcome gl_generators() {
  Checker c;
  std::size_t matrices = 0;
  for (int p : {2, 3, 5})
    for (int m : {1, 2, 3})
      for (int n : {1, 2}) {
        const auto rep = gl_check(p, n, m, 200, mix_seed(default_master_seed(), static_cast<std::uint64_t>(p * 100 + m * 10 + n)));
        matrices += rep.generators_checked + rep.random_checked;
        c.expect(rep.random_checked >= 200, "too few random matrices");
        c.expect(rep.passed(), "GL(" + std::to_string(m) + ", GF(" + std::to_string(p) + "^" + std::to_string(n) +
                                   ")) failed");
      }
  return c.outcome(std::to_string(matrices) + " matrices");
}

template <class E>
bool raises(const std::function<void()>& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

Outcome negative_controls() {
  Checker c;
  const CaseContext ctx(catalog("D8"), FieldSpec::get(2));
  const auto& k = ctx.kg.field();
  // Transpose the basis vectors g1 and g2: linear and bijective but not multiplicative.
  auto m = Matrix::identity(k, 8);
  m(1, 1) = m(2, 2) = k.zero();
  m(1, 2) = m(2, 1) = k.one();
  const AlgebraAutomorphism swap(ctx.kg, m, "swap g1, g2");
  c.expect(raises<NotMultiplicative>([&] { validate(swap); }), "swap accepted by exact validation");
  c.expect(raises<NotMultiplicative>([&] { validate(swap, ValidationMode::AllPairs); }), "swap accepted by pair check");
  c.expect(raises<NotMultiplicative>([&] { validate(swap, ValidationMode::Sampled, 1); }), "swap accepted by sampling");

  const auto c4 = catalog("C4");
  const std::vector<GroupElement> images{c4->generator(1), c4->generator(1)};
  c.expect(raises<NotBijective>([&] { c4->automorphism(images); }), "C4: g1 -> g2 accepted");

  c.expect(raises<InconsistentPresentation>([] {
             PcGroup::parse("pcgroup p=2 m=3\ng1^2 = g2\ng2^2 = g3\n[g2,g1] = g3\n");
           }),
           "inconsistent presentation accepted");
  c.expect(raises<InconsistentPresentation>([] { PcGroup::parse("pcgroup p=3 m=2\ng2^3 = g1\n"); }),
           "presentation with a lower generator on the right accepted");
  return c.outcome("3 rejections");
}

Outcome determinism(const std::string& binary) {
  Checker c;
  if (binary.empty()) return {false, "path to socle-verify not given"};
  const std::string cmd = "\"" + binary + "\" sweep --seed 7 --format json";
  auto capture = [&]() {
    std::string out;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[65536];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    c.expect(::pclose(pipe) == 0, "sweep exited with a nonzero status");
    return out;
  };
  const auto first = capture();
  const auto second = capture();
  c.expect(!first.empty(), "empty output");
  c.expect(first == second, "outputs differ");
  c.expect(first.find("\"seed\": 7") != std::string::npos, "seed not echoed");
  return c.outcome(std::to_string(first.size()) + " bytes identical");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"prime-field lambda = 1 over the catalog sweep", prime_field_sweep},
      {"extension-field lambda = det^(p-1), a (p-1)th power", extension_field_substitutions},
      {"definitional and recursive dimension subgroups agree", series_cross_validation},
      {"graded dimensions match PBW counts", dimension_consistency},
      {"socle is one-dimensional and equals the ordered product", socle_identity},
      {"bracket and restriction compatibility, degree-one generation", lie_structure},
      {"top-monomial scalar = det^(p-1) on GL generators and random matrices", gl_generators},
      {"negative controls are rejected", negative_controls},
      {"sweep JSON is byte-identical across runs", [&] { return determinism(binary); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("unexpected error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && out.ok;
    std::printf("%s  %zu. %s (%s) [%.2f s]\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
