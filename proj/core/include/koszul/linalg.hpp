#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

struct SparseEntry {
  std::uint32_t row;
  std::uint32_t col;
  std::int64_t value;
};

// Integer matrix in coordinate form. Repeated coordinates are summed.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  void add(std::uint32_t row, std::uint32_t col, std::int64_t value);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<SparseEntry>& entries() const noexcept { return entries_; }

  // Coordinate listing with 1-based indices, duplicates merged, zeros dropped.
  void write_matrix_market(std::ostream& os) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseEntry> entries_;
};

// Rank over the given field. Rationals use exact fraction-free elimination.
std::size_t rank(const SparseMatrix& m, const Field& field);

}  // namespace koszul
