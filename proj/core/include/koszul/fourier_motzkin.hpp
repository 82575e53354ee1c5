#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace koszul {

// Conjunction of linear constraints over the rationals, closed under
// Fourier-Motzkin projection.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const noexcept { return num_vars_; }

  // coeffs . x <= rhs
  void add_leq(std::vector<mpq_class> coeffs, mpq_class rhs);
  // coeffs . x == rhs
  void add_eq(std::vector<mpq_class> coeffs, mpq_class rhs);
  void add_nonnegative(std::size_t var);

  // Projects out one variable; the rational solution set of the remaining
  // variables is the projection of the old one.
  void eliminate(std::size_t var);
  bool feasible() const;

  struct Bounds {
    bool feasible = true;
    std::optional<mpq_class> lower;
    std::optional<mpq_class> upper;
  };
  // Range of one variable over the rational solution set.
  Bounds bounds(std::size_t var) const;

  std::size_t num_constraints() const noexcept { return leq_.size() + eq_.size(); }

 private:
  using Row = std::vector<mpq_class>;
  void insert_leq(Row coeffs, mpq_class rhs);
  void insert_eq(Row coeffs, mpq_class rhs);

  std::size_t num_vars_;
  bool contradiction_ = false;
  // normalized coefficient rows -> tightest right-hand side
  std::map<Row, mpq_class> leq_;
  std::map<Row, mpq_class> eq_;
};

}  // namespace koszul
