#pragma once

// End-to-end runs: field -> group -> radical filtration -> Jennings basis ->
// dimension check -> per-automorphism verification; the catalog sweep; the
// GL-generator check; report serialization.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "socle/autmod.hpp"

namespace socle {

inline constexpr std::uint64_t kDefaultMasterSeed = 0xB50C1E;
inline constexpr const char* kSeedEnvVar = "SOCLE_VERIFY_SEED";

/// kDefaultMasterSeed unless SOCLE_VERIFY_SEED is set. Throws ConfigError on
/// an unparsable value.
std::uint64_t default_master_seed();

/// Parses `p`, `p,n` or `p,n,modulus` (modulus in the field literal
/// grammar, e.g. `3,2,t^2+1`).
const FieldSpec& parse_field_choice(std::string_view text);

/// Everything computed once per (group, field) pair.
struct CaseContext {
  GroupAlgebra kg;
  RadicalFiltration jf;
  JenningsBasis jb;
  JqReport jq;

  /// Throws StageError naming the failing stage.
  CaseContext(GroupPtr group, const FieldSpec& field);
};

/// Builds an automorphism from the spec grammar:
///   group-auto: g1 -> g1 g3, g2 -> g2      (unlisted generators are fixed)
///   inner: 1 + g1 + (t)*g2
///   subst: x1 -> (t)*x1, x2 -> x2 + x1     (x_i stands for g_i - 1)
///   random-inner seed=N | random-subst seed=N | random-group-auto seed=N
///   compose: <spec> ; <spec> [; ...]       (applied right to left)
///   identity
///   @path                                  (spec read from a file)
/// A random spec without `seed=` uses `fallback_seed`.
AlgebraAutomorphism build_automorphism(const CaseContext& ctx, std::string_view spec,
                                       std::uint64_t fallback_seed = kDefaultMasterSeed);

struct RunConfig {
  std::string group = "C2";  // catalog name or presentation file
  const FieldSpec* field = nullptr;  // defaults to GF(p)
  std::vector<std::string> autos;
  std::uint64_t seed = kDefaultMasterSeed;
  bool full_check = false;  // all-pairs multiplicativity (sampled above 2^8)
};

struct JenningsRow {
  int r = 0;
  std::size_t order = 0;  // |F_r|
  std::size_t d_r = 0;
  std::vector<std::string> lifts;
};

struct RunReport {
  std::string group_name;
  std::size_t order = 0;
  int p = 0;
  int m = 0;
  std::string presentation;
  const FieldSpec* field = nullptr;
  std::vector<JenningsRow> jennings;
  std::vector<std::size_t> gr_dims;
  std::vector<std::size_t> pbw_dims;
  int socle_degree = 0;
  std::vector<VerificationReport> autos;
  bool verdict = true;
};

/// Fills the group, Jennings and dimension parts of a report.
RunReport describe_case(const CaseContext& ctx);

/// Verifies the given automorphisms and appends them to `report`.
void verify_into(RunReport& report, const CaseContext& ctx, const std::vector<AlgebraAutomorphism>& autos,
                 bool full_check, std::uint64_t seed);

/// Throws StageError (or ConfigError for a bad configuration).
RunReport run(const RunConfig& config);

/// The automorphisms the sweep uses for one case: stored group
/// automorphisms, 10 random group automorphisms, 25 random inner
/// automorphisms, 25 random substitutions (elementary abelian groups only)
/// and 15 compositions of earlier ones.
std::vector<AlgebraAutomorphism> sweep_automorphisms(const CaseContext& ctx, std::uint64_t case_seed);

struct SweepReport {
  std::uint64_t seed = 0;
  std::vector<RunReport> cases;
  bool verdict = true;
};

/// Every catalog group over GF(p) and GF(p^2). Case i uses mix_seed(seed, i).
SweepReport sweep(std::uint64_t master_seed);

struct GlCheckReport {
  int p = 0;
  int n = 0;
  int m = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t generators_checked = 0;
  std::size_t generators_passed = 0;
  std::size_t random_checked = 0;
  std::size_t random_passed = 0;
  bool passed() const {
    return generators_checked == generators_passed && random_checked == random_passed;
  }
};

/// Compares the top-monomial scalar with det^(p-1) for every elementary
/// matrix E_ij(c), every one-entry diagonal matrix and `count` random
/// invertible matrices.
GlCheckReport gl_check(int p, int n, int m, std::size_t count, std::uint64_t seed);

// Serialization. JSON keys keep a fixed order; field elements use the
// literal grammar.
nlohmann::ordered_json to_json(const RunReport& report);
nlohmann::ordered_json to_json(const SweepReport& report);
nlohmann::ordered_json to_json(const GlCheckReport& report);
/// {"layers": [...], "gr_dims": [...], "socle_degree": s}
nlohmann::ordered_json jennings_json(const RunReport& report);

std::string to_text(const RunReport& report);
std::string to_text(const SweepReport& report);
std::string to_text(const GlCheckReport& report);
std::string jennings_text(const RunReport& report);

}  // namespace socle
