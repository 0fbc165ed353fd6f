// socle-verify: checks that algebra automorphisms of kG (G a finite p-group)
// scale the socle by det(A)^(p-1), A the induced action on the Jennings layers.
//
// Exit status: 0 when every verdict holds, 1 when a verdict fails, 2 on
// usage, configuration or pipeline errors.

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "socle/verify.hpp"

namespace {

enum class Format { Text, Json };

void print(Format f, const nlohmann::ordered_json& j, const std::string& text) {
  if (f == Format::Json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify the socle scalar identity for automorphisms of modular p-group algebras"};
  app.require_subcommand(1);

  std::string group = "C2", field_text, format_text = "text";
  std::vector<std::string> autos;
  std::optional<std::uint64_t> seed;
  bool full_check = false;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  Format format = Format::Text;

  auto* run = app.add_subcommand("run", "Verify automorphisms of one group algebra");
  run->add_option("--group", group, "Catalog name or presentation file")->required();
  run->add_option("--field", field_text, "p[,n[,modulus]] (default GF(p))");
  run->add_option("--auto", autos, "Automorphism spec or @file (repeatable)");
  run->add_option("--seed", seed, "Master seed for random specs");
  run->add_option("--format", format, "text or json")->transform(CLI::CheckedTransformer(formats));
  run->add_flag("--full-check", full_check, "Check multiplicativity on all pairs (sampled above 256)");

  auto* sweep = app.add_subcommand("sweep", "Run the catalog sweep over GF(p) and GF(p^2)");
  sweep->add_option("--seed", seed, "Master seed");
  sweep->add_option("--format", format, "text or json")->transform(CLI::CheckedTransformer(formats));

  auto* jennings = app.add_subcommand("jennings", "Show the Jennings series and graded dimensions");
  jennings->add_option("--group", group, "Catalog name or presentation file")->required();
  jennings->add_option("--field", field_text, "p[,n[,modulus]] (default GF(p))");
  jennings->add_option("--format", format, "text or json")->transform(CLI::CheckedTransformer(formats));

  int gp = 0, gn = 1, gm = 1;
  std::size_t count = 200;
  std::uint64_t gseed = 1;
  auto* gl = app.add_subcommand("gl-check", "Top-monomial scalar against det^(p-1) in the truncated algebra");
  gl->add_option("--p", gp, "Characteristic")->required();
  gl->add_option("--n", gn, "Extension degree");
  gl->add_option("--m", gm, "Number of variables");
  gl->add_option("--count", count, "Random invertible matrices");
  gl->add_option("--seed", gseed, "Seed for the random matrices");
  gl->add_option("--format", format, "text or json")->transform(CLI::CheckedTransformer(formats));

  auto* cat = app.add_subcommand("catalog", "List the built-in groups");
  cat->add_option("--format", format, "text or json")->transform(CLI::CheckedTransformer(formats));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run || *jennings) {
      socle::RunConfig config;
      config.group = group;
      if (!field_text.empty()) config.field = &socle::parse_field_choice(field_text);
      config.seed = seed ? *seed : socle::default_master_seed();
      config.full_check = full_check;
      if (*run) config.autos = autos;
      const auto report = socle::run(config);
      if (*jennings)
        print(format, socle::jennings_json(report), socle::jennings_text(report));
      else
        print(format, socle::to_json(report), socle::to_text(report));
      return report.verdict ? 0 : 1;
    }
    if (*sweep) {
      const auto report = socle::sweep(seed ? *seed : socle::default_master_seed());
      print(format, socle::to_json(report), socle::to_text(report));
      return report.verdict ? 0 : 1;
    }
    if (*gl) {
      const auto report = socle::gl_check(gp, gn, gm, count, gseed);
      print(format, socle::to_json(report), socle::to_text(report));
      return report.passed() ? 0 : 1;
    }
    if (*cat) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      std::string text;
      for (const auto& name : socle::catalog_names()) {
        const auto g = socle::catalog(name);
        j.push_back({{"name", name}, {"order", g->order()}, {"p", g->p()}, {"m", g->m()}});
        text += name + std::string(name.size() < 10 ? 10 - name.size() : 1, ' ') + "order " +
                std::to_string(g->order()) + "\n";
      }
      print(format, j, text);
      return 0;
    }
  } catch (const socle::StageError& e) {
    std::cerr << "socle-verify: " << e.what() << "\n";
    return 2;
  } catch (const socle::Error& e) {
    std::cerr << "socle-verify: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  }
  return 2;
}
