#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "koszul/category.hpp"
#include "koszul/field.hpp"
#include "koszul/simplicial.hpp"

namespace koszul {

class FinitePoset {
 public:
  FinitePoset() = default;
  // Pairs (a, b) mean a <= b. The reflexive-transitive closure is taken;
  // throws NotAPoset when it is not antisymmetric.
  FinitePoset(std::vector<std::string> labels, std::span<const std::pair<std::uint32_t, std::uint32_t>> relations);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::uint32_t x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::uint32_t> find(std::string_view label) const;

  bool leq(std::uint32_t a, std::uint32_t b) const { return leq_[a * size() + b]; }
  bool less(std::uint32_t a, std::uint32_t b) const { return a != b && leq(a, b); }
  bool covers(std::uint32_t a, std::uint32_t b) const;

  // elements strictly between a and b
  std::vector<std::uint32_t> open_interval(std::uint32_t a, std::uint32_t b) const;
  // all pairs a <= b, row-major
  std::vector<std::pair<std::uint32_t, std::uint32_t>> comparable_pairs() const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cover_relations() const;

  // Longest chain length from a to b; a <= b required.
  int chain_length(std::uint32_t a, std::uint32_t b) const;

 private:
  std::vector<std::string> labels_;
  std::vector<bool> leq_;
};

// Every interval has all maximal chains of one length.
bool is_graded(const FinitePoset& poset);

class SimplicialComplex {
 public:
  using Face = std::vector<std::uint32_t>;

  explicit SimplicialComplex(std::vector<std::string> vertex_labels = {}) : labels_(std::move(vertex_labels)) {}

  // Inserts the face together with all of its subfaces.
  void add_face(Face face);
  bool contains(const Face& face) const;
  // nonempty faces; the empty face is always present
  const std::set<Face>& faces() const noexcept { return faces_; }
  int dimension() const;
  std::size_t num_vertices() const noexcept { return labels_.size(); }
  const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }

  SemiSimplicialSet to_semisimplicial() const;

 private:
  std::vector<std::string> labels_;
  std::set<Face> faces_;
};

SimplicialComplex order_complex(const FinitePoset& poset);
// Order complex of the open interval (a, b); vertices are the interval
// elements in increasing index order.
SimplicialComplex order_complex(const FinitePoset& poset, std::uint32_t a, std::uint32_t b);

// {G : F u G in K, F n G empty}. Throws FaceNotInComplex.
SimplicialComplex link(const SimplicialComplex& complex, const SimplicialComplex::Face& face);

struct CmResult {
  bool cohen_macaulay = true;
  // first face whose link has cohomology below its dimension
  std::optional<SimplicialComplex::Face> witness_face;
  BettiProfile witness_profile;
};

// Reduced cohomology of every link (the empty face included) vanishes below
// the link's dimension.
CmResult is_cohen_macaulay(const SimplicialComplex& complex, const Field& field);

struct LocalCmResult {
  bool locally_cohen_macaulay = true;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness_interval;
  CmResult detail;
};

// Every open interval has a Cohen-Macaulay order complex.
LocalCmResult is_locally_cohen_macaulay(const FinitePoset& poset, const Field& field);

// Objects are elements, morphisms the pairs x <= y labelled "[x,y]" with
// length the rank difference. Throws NotGraded.
FiniteGradedCategory poset_to_category(const FinitePoset& poset);

// Factorization space of [a,b] against the order complex of (a,b): equal cell
// counts per dimension and equal reduced cohomology.
bool verify_interval_equals_factorization(const FinitePoset& poset, std::uint32_t a, std::uint32_t b,
                                          const Field& field);

}  // namespace koszul
