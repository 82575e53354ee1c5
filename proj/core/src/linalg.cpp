#include "koszul/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <ostream>
#include <unordered_map>
#include <utility>

#include "koszul/errors.hpp"

namespace koszul {

void SparseMatrix::add(std::uint32_t row, std::uint32_t col, std::int64_t value) {
  if (row >= rows_ || col >= cols_)
    fail(ErrorKind::InvariantViolation, "matrix coordinate out of range");
  entries_.push_back({row, col, value});
}

namespace {

// Rows as sorted (col, coefficient) lists with duplicates combined.
std::vector<std::map<std::uint32_t, std::int64_t>> merged_rows(const SparseMatrix& m) {
  std::vector<std::map<std::uint32_t, std::int64_t>> rows(m.rows());
  for (const auto& e : m.entries()) rows[e.row][e.col] += e.value;
  return rows;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::int64_t p) {
  using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;
  std::unordered_map<std::uint32_t, Row> pivots;
  Row scratch;
  for (const auto& source : merged_rows(m)) {
    Row row;
    for (auto [c, v] : source)
      if (auto r = mod(v, p); r != 0) row.emplace_back(c, r);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        // normalise so the leading coefficient is 1
        std::int64_t inv = inverse_mod(row.front().second, p);
        for (auto& [c, v] : row) v = v * inv % p;
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const Row& piv = it->second;
      std::int64_t factor = row.front().second;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          scratch.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
          scratch.emplace_back(piv[j].first, mod(-factor * piv[j].second, p));
          ++j;
        } else {
          std::int64_t v = mod(row[i].second - factor * piv[j].second, p);
          if (v != 0) scratch.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
    }
  }
  return pivots.size();
}

std::size_t rank_rational(const SparseMatrix& m) {
  using Row = std::vector<std::pair<std::uint32_t, mpz_class>>;
  std::unordered_map<std::uint32_t, Row> pivots;
  Row scratch;
  for (const auto& source : merged_rows(m)) {
    Row row;
    for (auto [c, v] : source)
      if (v != 0) row.emplace_back(c, mpz_class(static_cast<long>(v)));
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const Row& piv = it->second;
      // row <- a*row - b*piv cancels the leading entry without fractions
      mpz_class a = piv.front().second, b = row.front().second;
      mpz_class g = gcd(a, b);
      a /= g;
      b /= g;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          scratch.emplace_back(row[i].first, a * row[i].second);
          ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
          scratch.emplace_back(piv[j].first, -b * piv[j].second);
          ++j;
        } else {
          mpz_class v = a * row[i].second - b * piv[j].second;
          if (v != 0) scratch.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      mpz_class content = 0;
      for (const auto& [c, v] : scratch) content = gcd(content, v);
      if (content > 1)
        for (auto& [c, v] : scratch) v /= content;
      row.swap(scratch);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const Field& field) {
  if (field.is_rational()) return rank_rational(m);
  return rank_mod_p(m, field.characteristic());
}

void SparseMatrix::write_matrix_market(std::ostream& os) const {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> merged;
  for (const auto& e : entries_) merged[{e.row, e.col}] += e.value;
  std::erase_if(merged, [](const auto& kv) { return kv.second == 0; });
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << rows_ << ' ' << cols_ << ' ' << merged.size() << '\n';
  for (const auto& [rc, v] : merged) os << rc.first + 1 << ' ' << rc.second + 1 << ' ' << v << '\n';
}

}  // namespace koszul
