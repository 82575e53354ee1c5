#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "koszul/category.hpp"
#include "koszul/simplicial.hpp"

namespace koszul {

// Factors listed outermost first: {f0, f1, ..., fk} composes to f0 o f1 o ... o fk.
using FactorSequence = std::vector<MorId>;

// The n-cells are the (n+2)-factor nontrivial factorizations of one morphism;
// face i composes factors i and i+1.
struct FactorizationSpace {
  MorId morphism;
  SemiSimplicialSet complex;
  std::vector<std::vector<FactorSequence>> cells;
};

// Builds factorization spaces, sharing factor enumerations between calls.
class FactorizationEngine {
 public:
  explicit FactorizationEngine(const FiniteGradedCategory& cat) : cat_(cat) {}

  // Throws IdentityMorphism for identities.
  FactorizationSpace space(MorId p);
  // Nontrivial factorizations of p into exactly `parts` factors.
  const std::vector<FactorSequence>& factorizations(MorId p, std::size_t parts);

 private:
  const FiniteGradedCategory& cat_;
  std::unordered_map<std::uint64_t, std::vector<FactorSequence>> memo_;
};

FactorizationSpace factorization_space(const FiniteGradedCategory& cat, MorId p);

// Cells of the reduced nerve: vertices are objects, n-cells composable
// n-tuples of non-identities (outermost first) whose composite is stored.
struct NerveCell {
  FactorSequence factors;
  // composite for n >= 1; for vertices the identity of the object
  MorId composite;
};

struct ReducedNerve {
  SemiSimplicialSet complex;
  std::vector<std::vector<NerveCell>> cells;
};

ReducedNerve reduced_nerve(const FiniteGradedCategory& cat);

// For k >= 2 the k-cells of the nerve with composite p correspond to the
// (k-2)-cells of the factorization space of p.
bool verify_cells_bijection(const FiniteGradedCategory& cat);

}  // namespace koszul
