#pragma once

// Addition and multiplication tables over element indices for small fields
// (q <= 256). Used by the hot kernels; everything else goes through
// FieldElement.

#include <cstdint>
#include <span>
#include <vector>

#include "socle/ffield.hpp"

namespace socle::detail {

class FieldTables {
 public:
  /// nullptr when q > 256.
  static const FieldTables* get(const FieldSpec& k);

  const std::uint8_t* add_row(std::uint8_t a) const { return &add_[static_cast<std::size_t>(a) << 8]; }
  const std::uint8_t* mul_row(std::uint8_t a) const { return &mul_[static_cast<std::size_t>(a) << 8]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  /// inv(0) is 0.
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }
  const FieldElement& element(std::uint8_t a) const { return elems_[a]; }

  void encode(std::span<const FieldElement> in, std::uint8_t* out) const;
  std::vector<std::uint8_t> encode(std::span<const FieldElement> in) const;
  void decode(const std::uint8_t* in, std::span<FieldElement> out) const;

 private:
  explicit FieldTables(const FieldSpec& k);

  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
  std::vector<FieldElement> elems_;
};

}  // namespace socle::detail
