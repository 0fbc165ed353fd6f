#include "socle/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <variant>

#include "socle/expr.hpp"
#include "socle/truncsym.hpp"

namespace socle {

namespace {

template <class F>
auto staged(const std::string& stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(stage, e);
  }
}

// Commutative polynomials with coefficients in k; monomials are exponent
// vectors over a fixed number of variables.
using Poly = std::map<std::vector<int>, FieldElement>;
using Resolved = std::variant<int, FieldElement>;  // variable slot or constant
using Resolver = std::function<Resolved(char letter, int index)>;

void add_into(Poly& acc, const std::vector<int>& mono, const FieldElement& c) {
  auto it = acc.find(mono);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

Poly poly_constant(int nvars, const FieldElement& c) {
  Poly out;
  add_into(out, std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      auto m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      add_into(out, m, ca * cb);
    }
  return out;
}

Poly eval_poly(const expr::Sum& sum, const FieldSpec& k, int nvars, const Resolver& resolve);

Poly eval_factor(const expr::Factor& f, const FieldSpec& k, int nvars, const Resolver& resolve) {
  Poly base;
  switch (f.kind) {
    case expr::Factor::Kind::Integer:
      base = poly_constant(nvars, k.from_int(f.value));
      break;
    case expr::Factor::Kind::Symbol: {
      const auto r = resolve(f.letter, f.index);
      if (const auto* slot = std::get_if<int>(&r)) {
        std::vector<int> mono(static_cast<std::size_t>(nvars), 0);
        mono[static_cast<std::size_t>(*slot)] = 1;
        base.emplace(mono, k.one());
      } else {
        base = poly_constant(nvars, std::get<FieldElement>(r));
      }
      break;
    }
    case expr::Factor::Kind::Paren:
      base = eval_poly(*f.inner, k, nvars, resolve);
      break;
  }
  long long e = f.exponent;
  if (e < 0) {
    // Only constants can be inverted.
    const std::vector<int> zero(static_cast<std::size_t>(nvars), 0);
    if (base.size() != 1 || base.begin()->first != zero) throw ParseError("negative exponent on a non-constant");
    base = poly_constant(nvars, base.begin()->second.inverse());
    e = -e;
  }
  auto out = poly_constant(nvars, k.one());
  for (long long i = 0; i < e; ++i) out = poly_mul(out, base);
  return out;
}

Poly eval_poly(const expr::Sum& sum, const FieldSpec& k, int nvars, const Resolver& resolve) {
  Poly out;
  for (const auto& term : sum.terms) {
    auto t = poly_constant(nvars, term.negative ? -k.one() : k.one());
    for (const auto& f : term.factors) t = poly_mul(t, eval_factor(f, k, nvars, resolve));
    for (const auto& [m, c] : t) add_into(out, m, c);
  }
  return out;
}

std::string symbol_name(char letter, int index) {
  return index ? std::string(1, letter) + std::to_string(index) : std::string(1, letter);
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("invalid ") + what + ": '" + text + "'");
  }
}

int parse_int(const std::string& text, const char* what) {
  const auto v = parse_u64(expr::trim(text), what);
  if (v > 1000000) throw ConfigError(std::string(what) + " out of range: " + text);
  return static_cast<int>(v);
}

std::string read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read automorphism file '" + path + "'");
  std::string line, joined;
  while (std::getline(in, line)) {
    const auto t = expr::trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!joined.empty()) joined += ' ';
    joined += t;
  }
  return joined;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::uint64_t default_master_seed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (!env || !*env) return kDefaultMasterSeed;
  return parse_u64(env, kSeedEnvVar);
}

const FieldSpec& parse_field_choice(std::string_view text) {
  const auto parts = expr::split_top_level(text, ',');
  if (parts.empty() || parts.size() > 3) throw ConfigError("field must be p[,n[,modulus]]");
  const int p = parse_int(parts[0], "characteristic");
  const int n = parts.size() > 1 ? parse_int(parts[1], "extension degree") : 1;
  try {
    if (parts.size() < 3) return FieldSpec::get(p, n);
    const auto& fp = FieldSpec::get(p);
    const Resolver resolve = [](char letter, int index) -> Resolved {
      if (letter == 't' && index == 0) return 0;
      throw ParseError("unknown symbol '" + symbol_name(letter, index) + "' in modulus");
    };
    const auto poly = eval_poly(expr::parse(parts[2]), fp, 1, resolve);
    std::vector<int> coeffs(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [mono, c] : poly) {
      if (mono[0] > n) throw ConfigError("modulus degree exceeds n = " + std::to_string(n));
      coeffs[static_cast<std::size_t>(mono[0])] = static_cast<int>(c.index());
    }
    if (coeffs.back() != 1) throw ConfigError("modulus must be monic of degree " + std::to_string(n));
    return FieldSpec::get(p, coeffs);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError("invalid field '" + std::string(text) + "': " + e.what());
  }
}

CaseContext::CaseContext(GroupPtr group, const FieldSpec& field)
    : kg(staged("group algebra", [&] { return GroupAlgebra(std::move(group), field); })),
      jf(staged("radical filtration", [&] { return RadicalFiltration(kg); })),
      jb(staged("jennings basis", [&] { return JenningsBasis(kg, jf); })),
      jq(staged("dimension check", [&] { return jq_dimension_check(jb, jf); })) {
  staged("socle", [&] {
    socle_vector(kg, jf);
    return 0;
  });
}

AlgebraAutomorphism build_automorphism(const CaseContext& ctx, std::string_view spec_view,
                                       std::uint64_t fallback_seed) {
  const auto spec = expr::trim(spec_view);
  if (spec.empty()) throw ParseError("empty automorphism spec");
  if (spec[0] == '@') return build_automorphism(ctx, read_spec_file(spec.substr(1)), fallback_seed);

  const auto& kg = ctx.kg;
  const auto& G = kg.group();
  const auto& k = kg.field();
  const auto colon = spec.find(':');
  const auto head = expr::trim(spec.substr(0, colon));
  const auto rest = colon == std::string::npos ? std::string() : expr::trim(spec.substr(colon + 1));

  auto with_provenance = [&](AlgebraAutomorphism a) {
    a.set_provenance(spec);
    return a;
  };

  if (head == "identity" && colon == std::string::npos)
    return AlgebraAutomorphism(kg, Matrix::identity(k, kg.dim()), "identity");

  if (head.rfind("random-", 0) == 0 && colon == std::string::npos) {
    std::istringstream words(head);
    std::string kind, token;
    words >> kind;
    std::uint64_t seed = fallback_seed;
    while (words >> token) {
      if (token.rfind("seed=", 0) != 0) throw ParseError("unexpected token '" + token + "' in '" + spec + "'");
      seed = parse_u64(token.substr(5), "seed");
    }
    Rng rng(seed);
    const auto prov = kind + " seed=" + std::to_string(seed);
    if (kind == "random-inner") {
      auto a = random_inner(kg, ctx.jf, rng);
      a.set_provenance(prov);
      return a;
    }
    if (kind == "random-subst") {
      auto a = random_substitution(kg, ctx.jf, rng);
      a.set_provenance(prov);
      return a;
    }
    if (kind == "random-group-auto") {
      const auto sigma = random_group_automorphism(G, rng);
      if (!sigma) throw ConfigError("no group automorphism found for " + prov);
      return from_group_automorphism(kg, *sigma, prov);
    }
    throw ParseError("unknown random automorphism kind '" + kind + "'");
  }
  if (colon == std::string::npos) throw ParseError("automorphism spec needs 'kind:' in '" + spec + "'");

  if (head == "group-auto") {
    std::vector<GroupElement> images;
    for (int i = 0; i < G.m(); ++i) images.push_back(G.generator(i));
    std::vector<bool> seen(static_cast<std::size_t>(G.m()), false);
    for (const auto& part : expr::split_top_level(rest, ',')) {
      const auto arrow = part.find("->");
      if (arrow == std::string::npos) throw ParseError("expected 'g_i -> word' in '" + part + "'");
      const auto lhs = expr::parse(part.substr(0, arrow));
      if (lhs.terms.size() != 1 || lhs.terms[0].negative || lhs.terms[0].factors.size() != 1 ||
          lhs.terms[0].factors[0].kind != expr::Factor::Kind::Symbol || lhs.terms[0].factors[0].letter != 'g' ||
          lhs.terms[0].factors[0].exponent != 1)
        throw ParseError("left side must be a generator in '" + part + "'");
      const int i = lhs.terms[0].factors[0].index;
      if (i < 1 || i > G.m()) throw ParseError("no generator g" + std::to_string(i));
      if (seen[static_cast<std::size_t>(i - 1)]) throw ParseError("g" + std::to_string(i) + " mapped twice");
      seen[static_cast<std::size_t>(i - 1)] = true;
      images[static_cast<std::size_t>(i - 1)] = G.parse_word(part.substr(arrow + 2));
    }
    return from_group_automorphism(kg, G.automorphism(images), spec);
  }

  if (head == "inner") return with_provenance(inner(kg, kg.parse(rest)));

  if (head == "subst") {
    const int m = G.m();
    auto linear = Matrix::identity(k, static_cast<std::size_t>(m));
    std::vector<AlgebraElement> tails(static_cast<std::size_t>(m), kg.zero());
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    const Resolver resolve = [&](char letter, int index) -> Resolved {
      if (letter == 'x' && index >= 1 && index <= m) return index - 1;
      if (letter == 't' && index == 0) return k.t();
      throw ParseError("unknown symbol '" + symbol_name(letter, index) + "' in substitution");
    };
    for (const auto& part : expr::split_top_level(rest, ',')) {
      const auto arrow = part.find("->");
      if (arrow == std::string::npos) throw ParseError("expected 'x_i -> polynomial' in '" + part + "'");
      const auto lhs = expr::trim(part.substr(0, arrow));
      if (lhs.size() < 2 || lhs[0] != 'x') throw ParseError("left side must be a variable in '" + part + "'");
      const int i = parse_int(lhs.substr(1), "variable index");
      if (i < 1 || i > m) throw ParseError("no variable x" + std::to_string(i));
      if (seen[static_cast<std::size_t>(i - 1)]) throw ParseError("x" + std::to_string(i) + " mapped twice");
      seen[static_cast<std::size_t>(i - 1)] = true;
      const auto row = static_cast<std::size_t>(i - 1);
      for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) linear(row, j) = k.zero();
      const auto poly = eval_poly(expr::parse(part.substr(arrow + 2)), k, m, resolve);
      for (const auto& [mono, c] : poly) {
        int degree = 0;
        for (int e : mono) degree += e;
        if (degree == 0) throw ParseError("substitution for x" + std::to_string(i) + " has a constant term");
        if (degree == 1) {
          for (std::size_t j = 0; j < mono.size(); ++j)
            if (mono[j]) linear(row, j) = c;
          continue;
        }
        auto term = kg.scalar(c);
        for (std::size_t j = 0; j < mono.size(); ++j)
          if (mono[j]) term = kg.multiply(term, kg.power(kg.minus_one(G.generator(static_cast<int>(j))), mono[j]));
        tails[row] += term;
      }
    }
    return with_provenance(elementary_abelian_substitution(kg, ctx.jf, linear, tails));
  }

  if (head == "compose") {
    const auto parts = expr::split_top_level(rest, ';');
    if (parts.empty() || parts.back().empty()) throw ParseError("compose needs '<spec> ; <spec>'");
    auto acc = build_automorphism(ctx, parts.back(), mix_seed(fallback_seed, parts.size() - 1));
    for (std::size_t i = parts.size() - 1; i-- > 0;)
      acc = compose(build_automorphism(ctx, parts[i], mix_seed(fallback_seed, i)), acc);
    return with_provenance(std::move(acc));
  }

  throw ParseError("unknown automorphism kind '" + head + "'");
}

RunReport describe_case(const CaseContext& ctx) {
  const auto& G = ctx.kg.group();
  RunReport rep;
  rep.group_name = G.name();
  rep.order = G.order();
  rep.p = G.p();
  rep.m = G.m();
  rep.presentation = G.presentation_text();
  rep.field = &ctx.kg.field();
  for (int r = 1; r <= ctx.jb.top_degree(); ++r) {
    JenningsRow row;
    row.r = r;
    row.order = ctx.jb.series()[static_cast<std::size_t>(r - 1)].order();
    row.d_r = ctx.jb.layer_dim(r);
    for (auto j : ctx.jb.layer(r)) row.lifts.push_back(G.format(ctx.jb.lifts()[j]));
    rep.jennings.push_back(std::move(row));
  }
  rep.gr_dims = ctx.jq.gr_dims;
  rep.pbw_dims = ctx.jq.pbw_dims;
  rep.socle_degree = ctx.jq.socle_degree;
  return rep;
}

void verify_into(RunReport& report, const CaseContext& ctx, const std::vector<AlgebraAutomorphism>& autos,
                 bool full_check, std::uint64_t seed) {
  const auto mode = full_check ? ValidationMode::AllPairs : ValidationMode::Exact;
  for (std::size_t i = 0; i < autos.size(); ++i) {
    const auto& a = autos[i];
    auto rep = staged("automorphism '" + a.provenance() + "'",
                      [&] { return verify_theorem(a, ctx.jb, ctx.jf, mode, mix_seed(seed, i)); });
    rep.provenance += " [validated: " + rep.validation + "]";
    report.verdict = report.verdict && rep.equation_holds && rep.in_subgroup;
    report.autos.push_back(std::move(rep));
  }
}

RunReport run(const RunConfig& config) {
  const auto group = staged("group", [&] { return load_group(config.group); });
  const auto& field = config.field ? *config.field : FieldSpec::get(group->p());
  if (field.p() != group->p())
    throw ConfigError("field " + field.name() + " has characteristic " + std::to_string(field.p()) +
                      " but the group is a " + std::to_string(group->p()) + "-group");
  const CaseContext ctx(group, field);
  auto report = describe_case(ctx);
  std::vector<AlgebraAutomorphism> autos;
  for (std::size_t i = 0; i < config.autos.size(); ++i)
    autos.push_back(staged("automorphism spec '" + config.autos[i] + "'", [&] {
      return build_automorphism(ctx, config.autos[i], mix_seed(config.seed, i));
    }));
  verify_into(report, ctx, autos, config.full_check, config.seed);
  return report;
}

std::vector<AlgebraAutomorphism> sweep_automorphisms(const CaseContext& ctx, std::uint64_t case_seed) {
  const auto& G = ctx.kg.group();
  Rng rng(case_seed);
  std::vector<AlgebraAutomorphism> autos;
  auto add = [&](const std::string& spec) { autos.push_back(build_automorphism(ctx, spec, case_seed)); };

  for (const auto& words : catalog_automorphisms(G.name())) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < words.size(); ++i) parts.push_back("g" + std::to_string(i + 1) + " -> " + words[i]);
    add("group-auto: " + join(parts, ", "));
  }
  for (int i = 0; i < 10; ++i) add("random-group-auto seed=" + std::to_string(rng()));
  for (int i = 0; i < 25; ++i) add("random-inner seed=" + std::to_string(rng()));
  if (is_elementary_abelian(G))
    for (int i = 0; i < 25; ++i) add("random-subst seed=" + std::to_string(rng()));
  const std::size_t base = autos.size();
  for (int i = 0; i < 15; ++i) {
    const auto& a = autos[rng() % base];
    const auto& b = autos[rng() % base];
    autos.push_back(compose(a, b));
  }
  return autos;
}

SweepReport sweep(std::uint64_t master_seed) {
  SweepReport out;
  out.seed = master_seed;
  std::uint64_t index = 0;
  for (const auto& name : catalog_names()) {
    const auto group = catalog(name);
    for (int n : {1, 2}) {
      const auto case_seed = mix_seed(master_seed, index++);
      const CaseContext ctx(group, FieldSpec::get(group->p(), n));
      auto report = describe_case(ctx);
      const auto autos = staged(name + " over GF(" + std::to_string(ctx.kg.field().q()) + ")",
                                [&] { return sweep_automorphisms(ctx, case_seed); });
      verify_into(report, ctx, autos, false, case_seed);
      out.verdict = out.verdict && report.verdict;
      out.cases.push_back(std::move(report));
    }
  }
  return out;
}

GlCheckReport gl_check(int p, int n, int m, std::size_t count, std::uint64_t seed) {
  if (m < 1 || m > 6) throw ConfigError("m must be between 1 and 6");
  const FieldSpec* kp = nullptr;
  try {
    kp = &FieldSpec::get(p, n);
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid field: ") + e.what());
  }
  const auto& k = *kp;
  if (k.q() > (1u << 16)) throw ConfigError("gl-check enumerates the field; q must be at most 65536");
  std::uint64_t states = 1;
  for (int i = 0; i < m; ++i) states *= static_cast<std::uint64_t>(p);
  if (states > (1u << 16)) throw ConfigError("p^m must be at most 65536");

  GlCheckReport rep{p, n, m, count, seed};
  auto check = [&](const Matrix& a) {
    try {
      return top_monomial_scalar(a) == determinant(a).pow(p - 1);
    } catch (const NotScalarMultiple&) {
      return false;
    }
  };
  const auto dim = static_cast<std::size_t>(m);
  for (std::uint64_t ci = 1; ci < k.q(); ++ci) {
    const auto c = k.from_index(ci);
    for (std::size_t i = 0; i < dim; ++i) {
      auto d = Matrix::identity(k, dim);
      d(i, i) = c;
      ++rep.generators_checked;
      rep.generators_passed += check(d);
      for (std::size_t j = 0; j < dim; ++j) {
        if (i == j) continue;
        auto e = Matrix::identity(k, dim);
        e(i, j) = c;
        ++rep.generators_checked;
        rep.generators_passed += check(e);
      }
    }
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    ++rep.random_checked;
    rep.random_passed += check(random_invertible(k, dim, rng));
  }
  return rep;
}

// --- serialization -------------------------------------------------------

namespace {

nlohmann::ordered_json field_json(const FieldSpec& k) {
  nlohmann::ordered_json j;
  j["p"] = k.p();
  j["n"] = k.n();
  j["modulus"] = k.modulus_string();
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["group"] = {{"name", r.group_name}, {"order", r.order}, {"p", r.p}};
  j["field"] = field_json(*r.field);
  auto& jen = j["jennings"] = nlohmann::ordered_json::array();
  for (const auto& row : r.jennings)
    jen.push_back({{"r", row.r}, {"order", row.order}, {"d_r", row.d_r}, {"lifts", row.lifts}});
  j["gr_dims"] = r.gr_dims;
  j["socle_degree"] = r.socle_degree;
  auto& autos = j["autos"] = nlohmann::ordered_json::array();
  for (const auto& a : r.autos) {
    nlohmann::ordered_json e;
    e["provenance"] = a.provenance;
    e["lambda"] = a.lambda.to_string();
    auto& blocks = e["det_blocks"] = nlohmann::ordered_json::array();
    for (const auto& d : a.action.det_blocks) blocks.push_back(d.to_string());
    e["det_total"] = a.action.det_total.to_string();
    e["det_pow"] = a.det_pow.to_string();
    e["equation_holds"] = a.equation_holds;
    e["in_subgroup"] = a.in_subgroup;
    e["lambda_is_one"] = a.lambda_is_one;
    autos.push_back(std::move(e));
  }
  j["verdict"] = r.verdict;
  return j;
}

nlohmann::ordered_json to_json(const SweepReport& s) {
  nlohmann::ordered_json j;
  j["seed"] = s.seed;
  auto& cases = j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : s.cases) cases.push_back(to_json(c));
  j["verdict"] = s.verdict;
  return j;
}

nlohmann::ordered_json to_json(const GlCheckReport& g) {
  nlohmann::ordered_json j;
  j["p"] = g.p;
  j["n"] = g.n;
  j["m"] = g.m;
  j["count"] = g.count;
  j["seed"] = g.seed;
  j["generators"] = {{"checked", g.generators_checked}, {"passed", g.generators_passed}};
  j["random"] = {{"checked", g.random_checked}, {"passed", g.random_passed}};
  j["verdict"] = g.passed();
  return j;
}

nlohmann::ordered_json jennings_json(const RunReport& r) {
  nlohmann::ordered_json j;
  auto& layers = j["layers"] = nlohmann::ordered_json::array();
  for (const auto& row : r.jennings) layers.push_back({{"r", row.r}, {"d_r", row.d_r}, {"lifts", row.lifts}});
  j["gr_dims"] = r.gr_dims;
  j["socle_degree"] = r.socle_degree;
  return j;
}

std::string jennings_text(const RunReport& r) {
  std::ostringstream out;
  out << "group " << r.group_name << " (order " << r.order << ", p = " << r.p << ")  field " << r.field->name()
      << " mod " << r.field->modulus_string() << "\n";
  out << "  r  |F_r|  d_r  lifts\n";
  for (const auto& row : r.jennings)
    out << "  " << std::left << std::setw(3) << row.r << std::setw(7) << row.order << std::setw(5) << row.d_r
        << join(row.lifts, ", ") << "\n";
  out << "dim gr_r(kG):  " << join_sizes(r.gr_dims) << "\n";
  out << "PBW counts:    " << join_sizes(r.pbw_dims) << "\n";
  out << "socle degree:  " << r.socle_degree << "\n";
  return out.str();
}

std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << jennings_text(r);
  if (!r.autos.empty()) {
    out << "automorphisms\n";
    std::size_t i = 0;
    for (const auto& a : r.autos) {
      out << "  #" << ++i << "  lambda = " << a.lambda.to_string() << "  det(A) = " << a.action.det_total.to_string()
          << "  det(A)^(p-1) = " << a.det_pow.to_string() << "  equal: " << yes_no(a.equation_holds)
          << "  (p-1)th power: " << yes_no(a.in_subgroup) << "\n      " << a.provenance << "\n";
    }
  }
  out << "verdict: " << (r.verdict ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string to_text(const SweepReport& s) {
  std::ostringstream out;
  out << "sweep seed " << s.seed << "\n";
  for (const auto& c : s.cases) {
    std::size_t nontrivial = 0;
    for (const auto& a : c.autos) nontrivial += !a.lambda_is_one;
    out << "  " << std::left << std::setw(10) << c.group_name << std::setw(8) << c.field->name() << "autos "
        << std::setw(4) << c.autos.size() << "lambda != 1: " << std::setw(4) << nontrivial
        << (c.verdict ? "PASS" : "FAIL") << "\n";
  }
  out << "verdict: " << (s.verdict ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string to_text(const GlCheckReport& g) {
  std::ostringstream out;
  out << "GL(" << g.m << ", GF(" << g.p << "^" << g.n << "))\n"
      << "  generators: " << g.generators_passed << "/" << g.generators_checked << "\n"
      << "  random:     " << g.random_passed << "/" << g.random_checked << " (seed " << g.seed << ")\n"
      << "verdict: " << (g.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace socle
