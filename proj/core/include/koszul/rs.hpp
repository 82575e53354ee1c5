#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "koszul/category.hpp"
#include "koszul/factorization.hpp"
#include "koszul/poset.hpp"

namespace koszul {

struct Interval {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Partition of the closed intervals of a poset. Classes are numbered by their
// first member in row-major order of (lo, hi).
class IntervalRelation {
 public:
  // Unlisted intervals become singletons. Throws NotAPartition when an
  // interval is listed twice and SchemaError for pairs that are not intervals.
  IntervalRelation(const FinitePoset& poset, const std::vector<std::vector<Interval>>& classes);
  static IntervalRelation identity(const FinitePoset& poset);

  std::size_t num_classes() const noexcept { return members_.size(); }
  std::uint32_t class_of(Interval i) const;
  std::uint32_t class_of(std::uint32_t lo, std::uint32_t hi) const { return class_of(Interval{lo, hi}); }
  const std::vector<Interval>& members(std::uint32_t cls) const { return members_.at(cls); }
  bool equivalent(Interval x, Interval y) const { return class_of(x) == class_of(y); }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> class_;
  std::vector<std::vector<Interval>> members_;
};

struct A1Witness {
  Interval lower, lower_other, upper, upper_other;
};

struct A2Witness {
  Interval source, target;
  std::uint32_t element;
  std::size_t candidates;
};

struct A4Witness {
  Interval lower, upper;
};

struct RsAxiomReport {
  bool a1 = true;
  bool a2 = true;
  bool a4 = true;
  // the pointwise-determined comparison maps are order preserving
  bool tau_monotone = true;
  std::vector<A1Witness> a1_witnesses;
  std::vector<A2Witness> a2_witnesses;
  std::vector<A4Witness> a4_witnesses;
  std::optional<A2Witness> monotonicity_witness;
  bool ok() const { return a1 && a2 && a4; }
};

RsAxiomReport verify_rs_axioms(const FinitePoset& poset, const IntervalRelation& rel, std::size_t witness_limit = 10);

// Objects are the classes of point intervals, morphisms the classes of
// intervals; morphism i of the result is class i. Throws AxiomsNotVerified,
// NotGraded, LengthNotConstantOnClass.
FiniteGradedCategory rs_quotient(const FinitePoset& poset, const IntervalRelation& rel);

struct ReducedIncidenceAlgebra {
  std::size_t dimension = 0;
  // product[a * dimension + b] = class of xi_a . xi_b, or -1 for zero
  std::vector<std::int64_t> product;
  // set when the quotient category exists: the class map is an algebra
  // isomorphism onto the opposite algebra
  std::optional<bool> op_isomorphic;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> iso_failures;

  std::optional<std::uint32_t> multiply(std::uint32_t a, std::uint32_t b) const;
};

// Throws IllDefinedProduct when two witnesses give different classes.
ReducedIncidenceAlgebra reduced_incidence_algebra(const FinitePoset& poset, const IntervalRelation& rel);

struct Functor {
  FiniteGradedCategory domain;
  FiniteGradedCategory codomain;
  std::vector<ObjId> object_map;
  std::vector<MorId> morphism_map;
};

// Throws NotAFunctor unless identities, endpoints, composition and length are preserved.
void validate_functor(const Functor& f);
Functor identity_functor(const FiniteGradedCategory& cat);
bool is_isomorphism(const Functor& f);

struct AlmostDiscreteWitness {
  MorId morphism;
  FactorSequence factorization;
  std::vector<FactorSequence> lifts;
};

struct AlmostDiscreteVerdict {
  bool almost_discrete = true;
  std::optional<AlmostDiscreteWitness> witness;
};

AlmostDiscreteVerdict is_almost_discrete_fibration(const Functor& f);

struct DiscreteWitness {
  ObjId object;
  MorId morphism;
  std::vector<MorId> lifts;
};

struct DiscreteVerdict {
  bool discrete = true;
  std::optional<DiscreteWitness> witness;
};

DiscreteVerdict is_discrete_fibration(const Functor& f);

// The domain of f must be poset_to_category(poset). Throws
// NotSurjectiveOnMorphisms, NotAlmostDiscrete.
IntervalRelation relation_from_fibration(const FinitePoset& poset, const Functor& f);

// Functor from rs_quotient(poset, rel) to the codomain of f sending a class to
// the image of any member.
Functor quotient_comparison(const FinitePoset& poset, const IntervalRelation& rel, const Functor& f);

// Morphisms out of v, ordered by p <= q iff q = r o p. Throws UnknownObject.
FinitePoset path_poset(const FiniteGradedCategory& cat, ObjId v);

struct PathPosetProjection {
  // disjoint union over all objects; element i is morphism i of the category
  FinitePoset poset;
  // poset_to_category(poset) -> cat, p |-> target(p), [p,q] |-> q/p
  Functor projection;
};

PathPosetProjection path_poset_projection(const FiniteGradedCategory& cat);

}  // namespace koszul
