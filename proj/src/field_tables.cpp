#include "field_tables.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace socle::detail {

FieldTables::FieldTables(const FieldSpec& k) : add_(256 * 256, 0), mul_(256 * 256, 0), neg_(256, 0), inv_(256, 0) {
  const auto q = static_cast<std::size_t>(k.q());
  for (std::size_t i = 0; i < q; ++i) elems_.push_back(k.from_index(i));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      add_[(a << 8) | b] = static_cast<std::uint8_t>((elems_[a] + elems_[b]).index());
      mul_[(a << 8) | b] = static_cast<std::uint8_t>((elems_[a] * elems_[b]).index());
    }
  for (std::size_t a = 0; a < q; ++a) {
    neg_[a] = static_cast<std::uint8_t>((-elems_[a]).index());
    if (a != 0) inv_[a] = static_cast<std::uint8_t>(elems_[a].inverse().index());
  }
}

const FieldTables* FieldTables::get(const FieldSpec& k) {
  if (k.q() > 256) return nullptr;
  static std::mutex mu;
  static std::map<const FieldSpec*, std::unique_ptr<FieldTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[&k];
  if (!slot) slot.reset(new FieldTables(k));
  return slot.get();
}

void FieldTables::encode(std::span<const FieldElement> in, std::uint8_t* out) const {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = static_cast<std::uint8_t>(in[i].index());
}

std::vector<std::uint8_t> FieldTables::encode(std::span<const FieldElement> in) const {
  std::vector<std::uint8_t> out(in.size());
  encode(in, out.data());
  return out;
}

void FieldTables::decode(const std::uint8_t* in, std::span<FieldElement> out) const {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = elems_[in[i]];
}

}  // namespace socle::detail
