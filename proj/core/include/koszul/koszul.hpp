#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "koszul/category.hpp"
#include "koszul/field.hpp"
#include "koszul/simplicial.hpp"

namespace koszul {

// Cohomological degree -> dimension, zeros omitted.
using ExtDims = std::map<int, std::uint64_t>;

// Ext^degree(S_to_simple, S_from_simple) in internal degree -length, computed
// from factorization spaces of the morphisms from `from` to `to` of that length.
ExtDims ext_simples(const FiniteGradedCategory& cat, ObjId to, ObjId from, int length, const Field& field);

// Same quantity from the normalized bar complex: generators are composable
// tuples of non-identities, differential the alternating sum of inner compositions.
ExtDims ext_oracle_resolution(const FiniteGradedCategory& cat, ObjId to, ObjId from, int length,
                              const Field& field);

struct ExtKey {
  ObjId to;
  ObjId from;
  int length;
  int degree;
  friend auto operator<=>(const ExtKey&, const ExtKey&) = default;
};

using ExtTable = std::map<ExtKey, std::uint64_t>;

ExtTable ext_table(const FiniteGradedCategory& cat, const Field& field);
ExtTable ext_table_oracle(const FiniteGradedCategory& cat, const Field& field);
// Swaps the two simples in every key.
ExtTable transpose(const ExtTable& table);

struct KoszulOptions {
  std::size_t witness_limit = 10;
  // only morphisms up to this length are examined
  std::optional<int> max_length;
};

struct KoszulWitness {
  MorId morphism;
  BettiProfile profile;
};

struct KoszulVerdict {
  bool koszul = true;
  // nullopt when every morphism was examined
  std::optional<int> checked_up_to;
  std::size_t failing_morphisms = 0;
  std::size_t examined_morphisms = 0;
  // ordered by (length, index)
  std::vector<KoszulWitness> witnesses;
};

// Every factorization space has reduced cohomology only in degree length - 2.
KoszulVerdict is_koszul(const FiniteGradedCategory& cat, const Field& field, const KoszulOptions& options = {});

struct GenerationReport {
  bool generated = true;
  // morphisms of length >= 2 with no nontrivial factorization
  std::vector<MorId> witnesses;
};

GenerationReport generated_in_degree_one(const FiniteGradedCategory& cat);

// Factorization spaces nonempty for length != 1 and connected for length != 2.
bool quadratic_sufficient(const FiniteGradedCategory& cat, const Field& field);

enum class Quadraticity { Quadratic, NotQuadratic, Unknown };

std::string_view to_string(Quadraticity q);

struct QuadraticReport {
  Quadraticity status = Quadraticity::Quadratic;
  bool sufficient_condition = true;
  GenerationReport generation;
  // morphisms of length >= 3 whose factorization space is disconnected
  std::vector<MorId> higher_relations;
  std::optional<int> checked_up_to;
};

QuadraticReport quadratic_status(const FiniteGradedCategory& cat, const Field& field,
                                 std::size_t witness_limit = 10);

}  // namespace koszul
