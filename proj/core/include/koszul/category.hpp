#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace koszul {

struct ObjId {
  std::uint32_t index = 0;
  friend auto operator<=>(ObjId, ObjId) = default;
};

struct MorId {
  std::uint32_t index = 0;
  friend auto operator<=>(MorId, MorId) = default;
};

struct Morphism {
  ObjId source;
  ObjId target;
  int length = 0;
  std::string label;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// `result` is second o first: first is applied before second.
struct CompositionEntry {
  MorId first;
  MorId second;
  MorId result;
  friend bool operator==(const CompositionEntry&, const CompositionEntry&) = default;
};

// outer o inner == the decomposed morphism, both factors non-identities.
struct Decomposition {
  MorId outer;
  MorId inner;
};

// Finite category with a length grading and a dense composition table.
// A truncated category omits every composite whose length exceeds the bound.
class FiniteGradedCategory {
 public:
  FiniteGradedCategory() = default;
  // Missing identity composites are filled in. Conflicting entries, bad
  // indices or non-composable entries throw SchemaError.
  FiniteGradedCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                       std::vector<MorId> identities, std::span<const CompositionEntry> composition,
                       std::optional<int> truncation = std::nullopt);

  std::size_t num_objects() const noexcept { return objects_.size(); }
  std::size_t num_morphisms() const noexcept { return morphisms_.size(); }
  const std::string& object_label(ObjId o) const { return objects_.at(o.index); }
  const std::vector<std::string>& object_labels() const noexcept { return objects_; }
  const Morphism& morphism(MorId m) const { return morphisms_.at(m.index); }
  const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }
  ObjId source(MorId m) const { return morphism(m).source; }
  ObjId target(MorId m) const { return morphism(m).target; }
  int length(MorId m) const { return morphism(m).length; }

  MorId identity(ObjId o) const { return identities_.at(o.index); }
  bool is_identity(MorId m) const;

  bool composable(MorId first, MorId second) const { return target(first) == source(second); }
  // second o first, when composable and stored.
  std::optional<MorId> compose(MorId first, MorId second) const;
  // Composable, absent, and dropped by truncation.
  bool out_of_range(MorId first, MorId second) const;

  std::span<const MorId> hom(ObjId from, ObjId to) const;
  const std::vector<Decomposition>& decompositions(MorId m) const { return decompositions_.at(m.index); }

  std::optional<int> truncation() const noexcept { return truncation_; }
  int max_length() const noexcept { return max_length_; }

  std::optional<ObjId> find_object(std::string_view label) const;
  std::optional<MorId> find_morphism(std::string_view label) const;

  std::vector<CompositionEntry> composition_entries() const;
  const std::vector<MorId>& identities() const noexcept { return identities_; }

  friend bool operator==(const FiniteGradedCategory& a, const FiniteGradedCategory& b);

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identities_;
  std::optional<int> truncation_;
  int max_length_ = 0;
  // n*n table; -1 means no stored composite
  std::vector<std::int32_t> table_;
  std::vector<std::vector<MorId>> hom_;
  std::vector<std::vector<Decomposition>> decompositions_;
};

enum class ViolationKind {
  Associativity,
  LeftIdentity,
  RightIdentity,
  MissingComposite,
  LengthNotAdditive,
  NonIdentityOfLengthZero,
  IdentityLength,
};

std::string_view to_string(ViolationKind kind);

struct CategoryViolation {
  ViolationKind kind;
  std::vector<MorId> witness;
};

struct CategoryReport {
  std::vector<CategoryViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks associativity, identity laws, closure (modulo truncation), length
// additivity and skeletal normal form. Each violation carries the morphisms involved.
CategoryReport validate(const FiniteGradedCategory& cat);

// Full subcategory on one representative per isomorphism class of length-0 morphisms.
FiniteGradedCategory skeletalize(const FiniteGradedCategory& cat);

FiniteGradedCategory opposite(const FiniteGradedCategory& cat);

// Morphism (i, j) of the product has index i * B.num_morphisms() + j.
FiniteGradedCategory product(const FiniteGradedCategory& a, const FiniteGradedCategory& b);

struct QuiverArrow {
  std::string label;
  std::uint32_t source;
  std::uint32_t target;
  int length = 1;
};

// Paths are arrow indices in traversal order: the first arrow is applied first.
using QuiverPath = std::vector<std::uint32_t>;

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<std::pair<QuiverPath, QuiverPath>> relations;
  int max_length = 0;
  // reject presentations whose closure is not cancellative
  bool require_cancellative = true;
};

// Enumerates paths up to max_length and identifies them under the two-sided
// congruence generated by the relations.
FiniteGradedCategory from_quiver(const QuiverPresentation& quiver);

}  // namespace koszul

template <>
struct std::hash<koszul::MorId> {
  std::size_t operator()(koszul::MorId m) const noexcept { return m.index; }
};
template <>
struct std::hash<koszul::ObjId> {
  std::size_t operator()(koszul::ObjId o) const noexcept { return o.index; }
};
