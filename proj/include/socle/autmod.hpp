#pragma once

// k-algebra automorphisms of kG: construction, validation, the socle scalar
// lambda with alpha(n) = lambda n, and the induced action on the Jennings layers.

#include <optional>
#include <string>
#include <vector>

#include "socle/jennings.hpp"
#include "socle/random.hpp"

namespace socle {

class AlgebraAutomorphism {
 public:
  /// Column g of `matrix` holds the coordinates of alpha(g). No validation.
  AlgebraAutomorphism(const GroupAlgebra& kg, Matrix matrix, std::string provenance);

  const GroupAlgebra& algebra() const noexcept { return kg_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  const std::string& provenance() const noexcept { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  AlgebraElement image(GroupElement g) const;
  AlgebraElement operator()(const AlgebraElement& x) const;

 private:
  GroupAlgebra kg_;
  Matrix matrix_;
  std::string provenance_;
};

/// Linear extension of a group automorphism (a permutation matrix).
AlgebraAutomorphism from_group_automorphism(const GroupAlgebra& kg, const GroupAutomorphism& sigma,
                                            std::string provenance = "group-auto");

/// The linear map sending g_1^e_1 ... g_m^e_m to the same ordered product of
/// the given images of the pc generators. It is an algebra map exactly when
/// the images satisfy the defining relations; validate() decides that.
AlgebraAutomorphism from_generator_images(const GroupAlgebra& kg, const std::vector<AlgebraElement>& images,
                                          std::string provenance);

/// x -> u x u^-1. Throws NotAUnit.
AlgebraAutomorphism inner(const GroupAlgebra& kg, const AlgebraElement& u);

/// g_i -> 1 + sum_j a(i, j) (g_j - 1) + higher_i for elementary abelian G.
/// `higher` is empty or has one entry per generator, each in J^2.
/// Throws DomainError (G not elementary abelian), SingularLinearPart,
/// FiltrationError (a tail outside J^2).
AlgebraAutomorphism elementary_abelian_substitution(const GroupAlgebra& kg, const RadicalFiltration& jf,
                                                    const Matrix& linear,
                                                    const std::vector<AlgebraElement>& higher = {});

/// alpha o beta (beta applied first).
AlgebraAutomorphism compose(const AlgebraAutomorphism& alpha, const AlgebraAutomorphism& beta);

enum class ValidationMode {
  Exact,     // alpha(1) = 1 and alpha(g s) = alpha(g) alpha(s) for g in G, s in a generating set
  AllPairs,  // alpha(g h) = alpha(g) alpha(h) for all g, h
  Sampled,   // random pairs
};

struct ValidationResult {
  ValidationMode mode = ValidationMode::Exact;
  std::size_t pairs_checked = 0;
  std::string describe() const;
};

/// Throws NotMultiplicative or NotInvertible. AllPairs falls back to Sampled
/// with 10|G| pairs above kFullPairLimit.
inline constexpr std::size_t kFullPairLimit = 256;
ValidationResult validate(const AlgebraAutomorphism& alpha, ValidationMode mode = ValidationMode::Exact,
                          std::uint64_t seed = 0);

/// Throws SocleNotPreserved when alpha(n) is not a scalar multiple of n.
FieldElement lambda_of(const AlgebraAutomorphism& alpha);

/// Throws FiltrationNotPreserved unless alpha(J^r) is inside J^r for all r.
void check_filtration(const AlgebraAutomorphism& alpha, const RadicalFiltration& jf);

struct GradedAction {
  std::vector<Matrix> blocks;  // A_r for r = 1 .. top degree; 0x0 on empty layers
  std::vector<FieldElement> det_blocks;
  FieldElement det_total;
};

/// Throws FiltrationNotPreserved, LieSubspaceViolated.
GradedAction induced_blocks(const AlgebraAutomorphism& alpha, const JenningsBasis& jb,
                            const RadicalFiltration& jf);

struct VerificationReport {
  std::string provenance;
  std::string validation;
  FieldElement lambda;
  GradedAction action;
  FieldElement det_pow;
  bool equation_holds = false;   // lambda = det_total^(p-1)
  bool in_subgroup = false;      // lambda in (k^x)^(p-1)
  bool lambda_is_one = false;
};

/// Validates alpha, checks the filtration, computes lambda and the blocks.
VerificationReport verify_theorem(const AlgebraAutomorphism& alpha, const JenningsBasis& jb,
                                  const RadicalFiltration& jf, ValidationMode mode = ValidationMode::Exact,
                                  std::uint64_t seed = 0);

// Random sources, all deterministic in the generator state.

/// Images of a minimal generating set drawn outside the Frattini subgroup and
/// kept when they extend to an automorphism; nullopt after `attempts` misses.
std::optional<GroupAutomorphism> random_group_automorphism(const PcGroup& g, Rng& rng, int attempts = 2000);
/// u = 1 + (random element of J).
AlgebraAutomorphism random_inner(const GroupAlgebra& kg, const RadicalFiltration& jf, Rng& rng);
/// Random invertible linear part plus random J^2 tails.
AlgebraAutomorphism random_substitution(const GroupAlgebra& kg, const RadicalFiltration& jf, Rng& rng,
                                        bool with_tails = true);

bool is_elementary_abelian(const PcGroup& g);

}  // namespace socle
