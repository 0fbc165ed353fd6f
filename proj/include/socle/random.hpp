#pragma once

// Seeded randomness shared by the sweep, the generators and the tests.

#include <cstdint>
#include <random>

#include "socle/linalg.hpp"

namespace socle {

using Rng = std::mt19937_64;

/// splitmix64 finalizer applied to master + counter; gives independent per-case seeds.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t counter);

FieldElement random_element(const FieldSpec& k, Rng& rng);
FieldElement random_nonzero(const FieldSpec& k, Rng& rng);
Matrix random_matrix(const FieldSpec& k, std::size_t rows, std::size_t cols, Rng& rng);
/// Rejection sampling on the determinant.
Matrix random_invertible(const FieldSpec& k, std::size_t n, Rng& rng);

}  // namespace socle
