#include "socle/random.hpp"

namespace socle {

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t counter) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

FieldElement random_element(const FieldSpec& k, Rng& rng) {
  return k.from_index(rng() % k.q());
}

FieldElement random_nonzero(const FieldSpec& k, Rng& rng) {
  return k.from_index(1 + rng() % (k.q() - 1));
}

Matrix random_matrix(const FieldSpec& k, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix a(k, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_element(k, rng);
  return a;
}

Matrix random_invertible(const FieldSpec& k, std::size_t n, Rng& rng) {
  for (;;) {
    auto a = random_matrix(k, n, n, rng);
    if (!determinant(a).is_zero()) return a;
  }
}

}  // namespace socle
