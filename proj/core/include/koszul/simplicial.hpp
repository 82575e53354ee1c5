#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/linalg.hpp"

namespace koszul {

// Finite semi-simplicial set: cells graded by dimension, each n-cell (n >= 1)
// carrying n+1 face indices into dimension n-1.
class SemiSimplicialSet {
 public:
  // Appends an n-cell and returns its index within dimension n.
  std::uint32_t add_cell(std::size_t dim, std::span<const std::uint32_t> faces);
  std::uint32_t add_vertex() { return add_cell(0, {}); }

  // Highest dimension holding a cell, -1 when empty.
  int top_dimension() const;
  std::size_t size(std::size_t dim) const { return dim < levels_.size() ? levels_[dim].count : 0; }
  std::size_t num_levels() const { return levels_.size(); }
  std::uint32_t face(std::size_t dim, std::uint32_t cell, std::size_t i) const;
  std::span<const std::uint32_t> faces(std::size_t dim, std::uint32_t cell) const;
  bool empty() const { return top_dimension() < 0; }

 private:
  struct Level {
    std::size_t count = 0;
    std::vector<std::uint32_t> faces;
  };
  std::vector<Level> levels_;
};

struct BettiProfile {
  // nonzero reduced Betti numbers only
  std::map<int, std::uint64_t> reduced_betti;
  int top_dim = -1;

  std::uint64_t at(int degree) const;
  friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

// Coboundary of the augmented complex between dimensions dim-1 and dim, as a
// matrix with one row per dim-cell. dim == 0 gives the augmentation row block.
SparseMatrix boundary_matrix(const SemiSimplicialSet& x, std::size_t dim);

BettiProfile reduced_cohomology(const SemiSimplicialSet& x, const Field& field);

// Reduced cohomology vanishes outside the top dimension.
bool is_bouquet(const BettiProfile& profile);
bool is_bouquet(const SemiSimplicialSet& x, const Field& field);

struct FaceIdentityViolation {
  std::size_t dim;
  std::uint32_t cell;
  std::size_t i;
  std::size_t j;
  friend bool operator==(const FaceIdentityViolation&, const FaceIdentityViolation&) = default;
};

// All (cell, i < j) where d_i d_j != d_{j-1} d_i.
std::vector<FaceIdentityViolation> check_semisimplicial(const SemiSimplicialSet& x);

std::int64_t euler_characteristic(const SemiSimplicialSet& x);

// Every boundary matrix in coordinate form, one block per dimension.
void write_incidence_dump(const SemiSimplicialSet& x, std::ostream& os);

}  // namespace koszul
