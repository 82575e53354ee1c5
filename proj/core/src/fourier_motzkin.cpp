#include "koszul/fourier_motzkin.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

std::optional<std::size_t> leading(const std::vector<mpq_class>& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) return i;
  return std::nullopt;
}

}  // namespace

void LinearSystem::add_leq(std::vector<mpq_class> coeffs, mpq_class rhs) {
  if (coeffs.size() != num_vars_) fail(ErrorKind::InvariantViolation, "constraint has the wrong width");
  insert_leq(std::move(coeffs), std::move(rhs));
}

void LinearSystem::add_eq(std::vector<mpq_class> coeffs, mpq_class rhs) {
  if (coeffs.size() != num_vars_) fail(ErrorKind::InvariantViolation, "constraint has the wrong width");
  insert_eq(std::move(coeffs), std::move(rhs));
}

void LinearSystem::add_nonnegative(std::size_t var) {
  Row row(num_vars_, 0);
  row.at(var) = -1;
  insert_leq(std::move(row), 0);
}

void LinearSystem::insert_leq(Row coeffs, mpq_class rhs) {
  auto lead = leading(coeffs);
  if (!lead) {
    if (rhs < 0) contradiction_ = true;
    return;
  }
  // positive scaling keeps the direction; make the leading magnitude 1
  mpq_class scale = abs(coeffs[*lead]);
  for (auto& c : coeffs) c /= scale;
  rhs /= scale;
  auto [it, fresh] = leq_.emplace(std::move(coeffs), rhs);
  if (!fresh && rhs < it->second) it->second = rhs;
}

void LinearSystem::insert_eq(Row coeffs, mpq_class rhs) {
  auto lead = leading(coeffs);
  if (!lead) {
    if (rhs != 0) contradiction_ = true;
    return;
  }
  mpq_class scale = coeffs[*lead];
  for (auto& c : coeffs) c /= scale;
  rhs /= scale;
  auto [it, fresh] = eq_.emplace(std::move(coeffs), rhs);
  if (!fresh && it->second != rhs) contradiction_ = true;
}

void LinearSystem::eliminate(std::size_t var) {
  if (contradiction_) return;
  // an equality involving var substitutes exactly
  for (auto it = eq_.begin(); it != eq_.end(); ++it) {
    if (it->first[var] == 0) continue;
    const Row pivot = it->first;
    const mpq_class pivot_rhs = it->second;
    eq_.erase(it);
    auto substitute = [&](const Row& row, const mpq_class& rhs, Row& out_row, mpq_class& out_rhs) {
      mpq_class factor = row[var] / pivot[var];
      out_row = row;
      for (std::size_t i = 0; i < num_vars_; ++i) out_row[i] -= factor * pivot[i];
      out_row[var] = 0;
      out_rhs = rhs - factor * pivot_rhs;
    };
    auto old_leq = std::move(leq_);
    auto old_eq = std::move(eq_);
    leq_.clear();
    eq_.clear();
    Row row;
    mpq_class rhs;
    for (const auto& [r, b] : old_leq) {
      substitute(r, b, row, rhs);
      insert_leq(std::move(row), rhs);
    }
    for (const auto& [r, b] : old_eq) {
      substitute(r, b, row, rhs);
      insert_eq(std::move(row), rhs);
    }
    return;
  }

  std::vector<std::pair<Row, mpq_class>> pos, neg;
  auto old_leq = std::move(leq_);
  leq_.clear();
  for (auto& [r, b] : old_leq) {
    if (r[var] > 0)
      pos.emplace_back(r, b);
    else if (r[var] < 0)
      neg.emplace_back(r, b);
    else
      insert_leq(r, b);
  }
  for (const auto& [p, pb] : pos) {
    for (const auto& [n, nb] : neg) {
      mpq_class wp = -n[var], wn = p[var];
      Row row(num_vars_);
      for (std::size_t i = 0; i < num_vars_; ++i) row[i] = wp * p[i] + wn * n[i];
      row[var] = 0;
      insert_leq(std::move(row), wp * pb + wn * nb);
    }
  }
}

bool LinearSystem::feasible() const {
  LinearSystem copy = *this;
  for (std::size_t v = 0; v < num_vars_; ++v) copy.eliminate(v);
  return !copy.contradiction_;
}

LinearSystem::Bounds LinearSystem::bounds(std::size_t var) const {
  LinearSystem copy = *this;
  for (std::size_t v = 0; v < num_vars_; ++v)
    if (v != var) copy.eliminate(v);
  Bounds out;
  if (copy.contradiction_) {
    out.feasible = false;
    return out;
  }
  auto tighten_upper = [&](const mpq_class& u) {
    if (!out.upper || u < *out.upper) out.upper = u;
  };
  auto tighten_lower = [&](const mpq_class& l) {
    if (!out.lower || l > *out.lower) out.lower = l;
  };
  for (const auto& [row, rhs] : copy.leq_) {
    mpq_class c = row[var];
    if (c > 0)
      tighten_upper(rhs / c);
    else
      tighten_lower(rhs / c);
  }
  for (const auto& [row, rhs] : copy.eq_) {
    tighten_upper(rhs / row[var]);
    tighten_lower(rhs / row[var]);
  }
  if (out.lower && out.upper && *out.lower > *out.upper) out.feasible = false;
  return out;
}

}  // namespace koszul
