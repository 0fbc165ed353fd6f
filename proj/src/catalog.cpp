#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>

#include "socle/pgroup.hpp"

namespace socle {

namespace {

// C_{p^k}: g_i^p = g_{i+1}.
PcPresentation cyclic(std::string name, int p, int k) {
  auto pres = PcPresentation::elementary(std::move(name), p, k);
  for (int i = 1; i < k; ++i) pres.power(i, {{i + 1, 1}});
  return pres;
}

struct Entry {
  std::string name;
  std::function<PcPresentation()> build;
  std::vector<std::vector<std::string>> autos;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    // p = 2
    t.push_back({"C2", [] { return cyclic("C2", 2, 1); }, {{"g1"}}});
    t.push_back({"C4", [] { return cyclic("C4", 2, 2); }, {{"g1 g2", "g2"}}});
    t.push_back({"C8", [] { return cyclic("C8", 2, 3); },
                 {{"g1 g2", "g2 g3", "g3"}, {"g1 g3", "g2", "g3"}}});
    t.push_back({"C2xC2", [] { return PcPresentation::elementary("C2xC2", 2, 2); },
                 {{"g2", "g1"}, {"g1 g2", "g2"}}});
    t.push_back({"C2xC2xC2", [] { return PcPresentation::elementary("C2xC2xC2", 2, 3); },
                 {{"g2", "g3", "g1"}, {"g1 g2", "g2", "g3"}}});
    t.push_back({"C4xC2",
                 [] {
                   auto pres = PcPresentation::elementary("C4xC2", 2, 3);
                   pres.power(1, {{2, 1}});
                   return pres;
                 },
                 {{"g1 g3", "g2", "g3"}, {"g1", "g2", "g2 g3"}}});
    t.push_back({"D8",
                 [] {
                   auto pres = PcPresentation::elementary("D8", 2, 3);
                   pres.power(2, {{3, 1}}).commutator(2, 1, {{3, 1}});
                   return pres;
                 },
                 {{"g1 g3", "g2", "g3"}, {"g1", "g2 g3", "g3"}, {"g1 g2", "g2", "g3"}}});
    t.push_back({"Q8",
                 [] {
                   auto pres = PcPresentation::elementary("Q8", 2, 3);
                   pres.power(1, {{3, 1}}).power(2, {{3, 1}}).commutator(2, 1, {{3, 1}});
                   return pres;
                 },
                 {{"g2", "g1", "g3"}, {"g2", "g1 g2", "g3"}}});
    t.push_back({"D16",
                 [] {
                   auto pres = PcPresentation::elementary("D16", 2, 4);
                   pres.power(2, {{3, 1}})
                       .power(3, {{4, 1}})
                       .commutator(2, 1, {{3, 1}, {4, 1}})
                       .commutator(3, 1, {{4, 1}});
                   return pres;
                 },
                 {{"g1 g2", "g2", "g3", "g4"}, {"g1", "g2 g3", "g3 g4", "g4"}}});
    t.push_back({"M16",
                 [] {
                   auto pres = PcPresentation::elementary("M16", 2, 4);
                   pres.power(2, {{3, 1}}).power(3, {{4, 1}}).commutator(2, 1, {{4, 1}});
                   return pres;
                 },
                 {{"g1", "g2 g3", "g3 g4", "g4"}, {"g1 g4", "g2", "g3", "g4"}}});
    // p = 3 and p = 5
    for (int p : {3, 5}) {
      const std::string ps = std::to_string(p);
      const std::string p2 = std::to_string(p * p);
      const std::string p3 = std::to_string(p * p * p);
      t.push_back({"C" + ps, [p, ps] { return cyclic("C" + ps, p, 1); }, {{"g1^2"}}});
      t.push_back({"C" + p2, [p, p2] { return cyclic("C" + p2, p, 2); }, {{"g1^2", "g2^2"}}});
      t.push_back({"C" + p3, [p, p3] { return cyclic("C" + p3, p, 3); },
                   {{"g1^2", "g2^2", "g3^2"}}});
      const std::string c2 = "C" + ps + "xC" + ps;
      t.push_back({c2, [p, c2] { return PcPresentation::elementary(c2, p, 2); },
                   {{"g2", "g1"}, {"g1 g2", "g2^2"}}});
      const std::string c3 = c2 + "xC" + ps;
      t.push_back({c3, [p, c3] { return PcPresentation::elementary(c3, p, 3); },
                   {{"g2", "g3", "g1"}, {"g1^2", "g2 g1", "g3"}}});
      const std::string heis = "Heis" + p3;
      t.push_back({heis,
                   [p, heis] {
                     auto pres = PcPresentation::elementary(heis, p, 3);
                     pres.commutator(2, 1, {{3, 1}});
                     return pres;
                   },
                   {{"g2", "g1", "g3^" + std::to_string(p - 1)}, {"g1 g2", "g2", "g3"}}});
      const std::string ext = "Ext" + p3;
      t.push_back({ext,
                   [p, ext] {
                     auto pres = PcPresentation::elementary(ext, p, 3);
                     pres.power(2, {{3, 1}}).commutator(2, 1, {{3, 1}});
                     return pres;
                   },
                   {{"g1", "g2^2", "g3^2"}, {"g1 g3", "g2", "g3"}}});
    }
    return t;
  }();
  return table;
}

const Entry& find_entry(std::string_view name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw UnknownGroup("unknown catalog group '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.push_back(e.name);
  return names;
}

GroupPtr catalog(std::string_view name) {
  static std::mutex mu;
  static std::vector<std::pair<std::string, GroupPtr>> cache;
  const Entry& entry = find_entry(name);
  std::lock_guard lock(mu);
  for (const auto& [n, g] : cache)
    if (n == entry.name) return g;
  auto g = std::make_shared<const PcGroup>(entry.build());
  cache.emplace_back(entry.name, g);
  return g;
}

std::vector<std::vector<std::string>> catalog_automorphisms(std::string_view name) {
  return find_entry(name).autos;
}

GroupPtr load_group(std::string_view name_or_path) {
  for (const auto& e : entries())
    if (e.name == name_or_path) return catalog(name_or_path);
  const std::filesystem::path path{std::string(name_or_path)};
  std::ifstream in(path);
  if (!in) throw UnknownGroup("'" + std::string(name_or_path) + "' is neither a catalog group nor a readable file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::make_shared<const PcGroup>(PcGroup::parse(buf.str(), path.stem().string()));
}

}  // namespace socle
