#pragma once

// Finite p-groups given by power-commutator presentations.
//
// Generators are g1..gm (0-based index i stands for g_{i+1}). Relations give
// the normal form of g_i^p and of [g_j, g_i] for j > i, with the commutator
// convention [x, y] = x^-1 y^-1 x y, so that y x = x y [y, x]. Relations may
// only mention generators of index greater than max(i, j).
//
// Elements are numbered by their normal form g1^e1 ... gm^em:
//   index = e1 + e2 p + ... + em p^(m-1),
// so the identity is 0 and g1 is 1. The whole Cayley table is materialized at
// construction and certified (identity, cancellation, associativity on all
// triples, defining relations).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socle/error.hpp"

namespace socle {

inline constexpr std::size_t kMaxGroupOrder = 512;

struct GroupElement {
  std::uint32_t index = 0;
  friend auto operator<=>(GroupElement, GroupElement) = default;
};

using Exponents = std::vector<int>;

/// (generator index, exponent); exponent may be negative once the group is built.
struct Letter {
  int generator = 0;
  long long exponent = 1;
};
using Word = std::vector<Letter>;

struct PcPresentation {
  std::string name;
  int p = 2;
  int m = 0;
  /// powers[i] = normal-form exponents of g_i^p.
  std::vector<Exponents> powers;
  /// commutators[{j, i}], j > i, = exponents of [g_j, g_i]; missing entries are trivial.
  std::map<std::pair<int, int>, Exponents> commutators;

  /// Empty presentation of the elementary abelian group of rank m.
  static PcPresentation elementary(std::string name, int p, int m);
  /// Builders use 1-based generator numbers as in the text format.
  /// Sets g_i^p; `rhs` is a list of (generator, exponent) pairs.
  PcPresentation& power(int i, std::initializer_list<std::pair<int, int>> rhs);
  /// Sets [g_j, g_i].
  PcPresentation& commutator(int j, int i, std::initializer_list<std::pair<int, int>> rhs);
};

class PcGroup;

/// Explicit subgroup: element list sorted by index plus generators.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<GroupElement> sorted_elements, std::vector<GroupElement> generators)
      : elements_(std::move(sorted_elements)), generators_(std::move(generators)) {}

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  bool contains(GroupElement g) const;
  bool is_subset_of(const Subgroup& other) const;
  bool is_trivial() const noexcept { return elements_.size() <= 1; }

  /// Equality compares element sets only.
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
};

/// A bijective endomorphism of a PcGroup, stored as the full element map.
class GroupAutomorphism {
 public:
  const std::vector<GroupElement>& generator_images() const noexcept { return images_; }
  GroupElement operator()(GroupElement g) const { return map_[g.index]; }
  const std::vector<GroupElement>& table() const noexcept { return map_; }

 private:
  friend class PcGroup;
  std::vector<GroupElement> images_;
  std::vector<GroupElement> map_;
};

class PcGroup {
 public:
  /// Throws InconsistentPresentation when the relations are malformed or the
  /// collected multiplication is not a group of order p^m.
  explicit PcGroup(PcPresentation presentation);

  /// Text format:
  ///   pcgroup p=2 m=3
  ///   g1^2 = g3
  ///   [g2,g1] = g3
  /// Omitted relations are trivial; '#' starts a comment.
  static PcGroup parse(std::string_view text, std::string name = "custom");

  const std::string& name() const noexcept { return pres_.name; }
  int p() const noexcept { return pres_.p; }
  int m() const noexcept { return pres_.m; }
  std::size_t order() const noexcept { return order_; }
  const PcPresentation& presentation() const noexcept { return pres_; }
  /// Presentation in the text format accepted by parse().
  std::string presentation_text() const;

  GroupElement identity() const noexcept { return {}; }
  /// g_{i+1}.
  GroupElement generator(int i) const;
  GroupElement element(std::span<const int> exponents) const;
  Exponents exponents(GroupElement g) const;
  std::vector<GroupElement> elements() const;

  /// Normal form of a word by collection from the left.
  GroupElement collect(const Word& word) const;

  GroupElement multiply(GroupElement a, GroupElement b) const {
    return GroupElement{table_[static_cast<std::size_t>(a.index) * order_ + b.index]};
  }
  GroupElement inverse(GroupElement a) const { return GroupElement{inverse_[a.index]}; }
  /// a^-1 b^-1 a b.
  GroupElement commutator(GroupElement a, GroupElement b) const;
  GroupElement power(GroupElement a, long long e) const;

  /// "g1 g2^2 g3", or "1" for the identity.
  std::string format(GroupElement g) const;
  /// Accepts any product of g-symbols with integer exponents, or `1`.
  GroupElement parse_word(std::string_view text) const;

  // Subgroup machinery.
  Subgroup subgroup_closure(std::span<const GroupElement> gens) const;
  Subgroup whole() const;
  Subgroup trivial() const;
  /// Subgroup generated by all [a, b], a in A, b in B.
  Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) const;
  /// gamma_1 = G, gamma_{i+1} = [gamma_i, G], ending with the trivial group.
  std::vector<Subgroup> lower_central_series() const;
  /// Subgroup generated by s^(p^j), s in S.
  Subgroup agemo(const Subgroup& s, int j) const;
  /// agemo(G, 1) gamma_2.
  Subgroup frattini() const;
  /// Dimension subgroups F_1, F_2, ... via the recursion
  ///   F_r = < [F_{r-1}, G], x^p for x in F_ceil(r/p) >,
  /// indexed so that result[r-1] = F_r; the last entry is the first trivial one.
  std::vector<Subgroup> jennings_series_recursive() const;
  /// A minimal generating set chosen greedily from g1..gm.
  std::vector<GroupElement> generating_set() const;

  /// Validates the generator images (bijectivity first, then every defining
  /// relation) and returns the extended map. Throws NotBijective /
  /// RelationViolation.
  GroupAutomorphism automorphism(std::span<const GroupElement> images) const;

 private:
  GroupElement collect_during_build(const Word& word) const;
  void build_table();
  void certify() const;

  PcPresentation pres_;
  std::size_t order_ = 1;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

using GroupPtr = std::shared_ptr<const PcGroup>;

// Built-in catalog.

/// Names accepted by catalog(), in sweep order.
std::vector<std::string> catalog_names();
/// Throws UnknownGroup.
GroupPtr catalog(std::string_view name);
/// Hand-picked generator-image lists (word text per generator) for the
/// catalog group; each defines a group automorphism.
std::vector<std::vector<std::string>> catalog_automorphisms(std::string_view name);
/// Catalog group name, or a path to a presentation file.
GroupPtr load_group(std::string_view name_or_path);

}  // namespace socle
