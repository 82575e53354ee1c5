#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "koszul/category.hpp"
#include "koszul/field.hpp"
#include "koszul/koszul.hpp"
#include "koszul/rs.hpp"

namespace koszul {

// Z^free_rank x prod Z/m_j
struct ClassGroup {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  std::size_t dimension() const { return free_rank + torsion.size(); }
};

using GroupElement = std::vector<std::int64_t>;

// Reduces torsion coordinates into [0, m_j).
GroupElement normalize(const ClassGroup& group, GroupElement g);
GroupElement add(const ClassGroup& group, const GroupElement& a, const GroupElement& b);
GroupElement subtract(const ClassGroup& group, const GroupElement& a, const GroupElement& b);
std::string format_element(const GroupElement& g);

struct ToricVariable {
  std::string name;
  GroupElement degree;
};

struct ToricCollectionSpec {
  ClassGroup group;
  std::vector<ToricVariable> variables;
  std::vector<GroupElement> collection;
  // cap on the total degree of enumerated monomials
  int max_total_degree = 64;
};

// Throws SchemaError on shape mismatches, bad moduli or repeated collection entries.
void validate_spec(const ToricCollectionSpec& spec);

using Exponents = std::vector<std::uint32_t>;

// Only the zero combination of free degrees with nonnegative rational weights vanishes.
bool is_pointed(const ClassGroup& group, const std::vector<GroupElement>& degrees);
bool is_pointed(const ToricCollectionSpec& spec);

// Exponent vectors of the monomials of degree d, in lexicographic order.
// Throws NotPointed, CapExceeded.
std::vector<Exponents> monomials_of_degree(const ToricCollectionSpec& spec, const GroupElement& d);
// Same, restricted to total degree <= max_total; no pointedness needed.
std::vector<Exponents> monomials_of_degree_bounded(const ToricCollectionSpec& spec, const GroupElement& d,
                                                   int max_total);

GroupElement degree_of(const ToricCollectionSpec& spec, const Exponents& u);
// Variables in descending index joined by "∘", e.g. x3∘x2∘x1; "1" for the unit.
std::string monomial_word(const ToricCollectionSpec& spec, const Exponents& u);

enum class SkewGrading {
  // length = number of indecomposable factors
  ArrowCount,
  // length = sum of exponents
  TotalDegree,
};

struct SkewCategory {
  FiniteGradedCategory category;
  // exponent vector of each morphism
  std::vector<Exponents> monomials;
};

// Objects are the collection entries; Hom(D_i, D_j) is the set of monomials of
// degree D_j - D_i. Throws NotPointed, NotGraded.
SkewCategory skew_category(const ToricCollectionSpec& spec, SkewGrading grading = SkewGrading::ArrowCount);

struct SaturationReport {
  bool saturated = true;
  // a < c < b with a, b in the set and c outside it
  std::optional<std::tuple<GroupElement, GroupElement, GroupElement>> witness;
};

SaturationReport is_saturated(const ToricCollectionSpec& spec, const std::vector<GroupElement>& subset);

struct Potential {
  bool exists = true;
  // normalized so each connected component has minimum 0
  std::vector<std::int64_t> values;
  // closed walk of length-1 arrows (with orientation) whose signed count is nonzero
  std::vector<std::pair<MorId, bool>> inconsistent_cycle;
};

// Integer f on objects with f(target) - f(source) = 1 for every length-1 morphism.
Potential arrow_potential(const FiniteGradedCategory& cat);

struct MonomialPosetReport {
  std::size_t object = 0;
  std::size_t size = 0;
  bool graded = true;
  bool locally_cohen_macaulay = true;
  std::optional<std::pair<std::string, std::string>> witness_interval;
};

struct ToricReport {
  SkewCategory skew;
  std::vector<MonomialPosetReport> posets;
  // every monomial poset locally Cohen-Macaulay
  bool koszul = true;
  KoszulVerdict factorization_check;
  SaturationReport saturation;
  Potential potential;
  // Koszul and a potential exists; assumes the collection is full strong exceptional
  bool strong_after_shift = false;
  bool conditional = true;
  std::vector<std::int64_t> shifts;
};

ToricReport toric_report(const ToricCollectionSpec& spec, const Field& field);

// One object; morphisms are the monomials of total degree <= max_total.
FiniteGradedCategory monomial_category(const ToricCollectionSpec& spec, int max_total);

// For a finite class group: the skew category over all group elements,
// truncated at max_total, with its projection to monomial_category.
Functor skew_group_projection(const ToricCollectionSpec& spec, int max_total);

}  // namespace koszul
