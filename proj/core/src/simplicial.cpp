#include "koszul/simplicial.hpp"

#include <ostream>

#include "koszul/errors.hpp"

namespace koszul {

std::uint32_t SemiSimplicialSet::add_cell(std::size_t dim, std::span<const std::uint32_t> faces) {
  if (faces.size() != (dim == 0 ? 0 : dim + 1))
    fail(ErrorKind::InvariantViolation, "an n-cell needs n+1 faces");
  if (dim > levels_.size())
    fail(ErrorKind::InvariantViolation, "cells must be added in increasing dimension");
  if (dim > 0)
    for (auto f : faces)
      if (f >= levels_[dim - 1].count)
        fail(ErrorKind::InvariantViolation, "face index out of range");
  if (dim == levels_.size()) levels_.emplace_back();
  Level& level = levels_[dim];
  level.faces.insert(level.faces.end(), faces.begin(), faces.end());
  return static_cast<std::uint32_t>(level.count++);
}

int SemiSimplicialSet::top_dimension() const {
  for (std::size_t d = levels_.size(); d-- > 0;)
    if (levels_[d].count > 0) return static_cast<int>(d);
  return -1;
}

std::uint32_t SemiSimplicialSet::face(std::size_t dim, std::uint32_t cell, std::size_t i) const {
  return levels_[dim].faces[cell * (dim + 1) + i];
}

std::span<const std::uint32_t> SemiSimplicialSet::faces(std::size_t dim, std::uint32_t cell) const {
  if (dim == 0) return {};
  return std::span<const std::uint32_t>(levels_[dim].faces).subspan(cell * (dim + 1), dim + 1);
}

std::uint64_t BettiProfile::at(int degree) const {
  auto it = reduced_betti.find(degree);
  return it == reduced_betti.end() ? 0 : it->second;
}

SparseMatrix boundary_matrix(const SemiSimplicialSet& x, std::size_t dim) {
  if (dim == 0) {
    SparseMatrix m(x.size(0), 1);
    for (std::uint32_t v = 0; v < x.size(0); ++v) m.add(v, 0, 1);
    return m;
  }
  SparseMatrix m(x.size(dim), x.size(dim - 1));
  for (std::uint32_t c = 0; c < x.size(dim); ++c)
    for (std::size_t i = 0; i <= dim; ++i) m.add(c, x.face(dim, c, i), i % 2 == 0 ? 1 : -1);
  return m;
}

namespace {
constexpr std::uint32_t kCertificatePrime = 2147483647;
}  // namespace

BettiProfile reduced_cohomology(const SemiSimplicialSet& x, const Field& field) {
  BettiProfile profile;
  profile.top_dim = x.top_dimension();
  if (profile.top_dim < 0) {
    profile.reduced_betti[-1] = 1;
    return profile;
  }
  if (field.is_rational()) {
    // Ranks can only drop mod p, so each rational Betti number is bounded by
    // the modular one. When the modular profile has at most one nonzero
    // degree the Euler characteristic forces the rational profile to match.
    auto modular = reduced_cohomology(x, Field::prime(kCertificatePrime));
    if (modular.reduced_betti.size() <= 1) return modular;
  }
  const auto top = static_cast<std::size_t>(profile.top_dim);
  // ranks[d] = rank of the map between dimension d-1 and d, with d = 0 the augmentation
  std::vector<std::size_t> ranks(top + 2, 0);
  for (std::size_t d = 0; d <= top; ++d) ranks[d] = rank(boundary_matrix(x, d), field);
  for (std::size_t d = 0; d <= top; ++d) {
    auto betti = x.size(d) - ranks[d] - ranks[d + 1];
    if (betti != 0) profile.reduced_betti[static_cast<int>(d)] = betti;
  }
  // augmented degree -1: one generator killed iff there is a vertex
  if (x.size(0) == 0) profile.reduced_betti[-1] = 1;
  return profile;
}

bool is_bouquet(const BettiProfile& profile) {
  for (const auto& [degree, value] : profile.reduced_betti)
    if (value != 0 && degree != profile.top_dim) return false;
  return true;
}

bool is_bouquet(const SemiSimplicialSet& x, const Field& field) {
  return is_bouquet(reduced_cohomology(x, field));
}

std::vector<FaceIdentityViolation> check_semisimplicial(const SemiSimplicialSet& x) {
  std::vector<FaceIdentityViolation> out;
  for (std::size_t n = 2; n < x.num_levels(); ++n)
    for (std::uint32_t c = 0; c < x.size(n); ++c)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (x.face(n - 1, x.face(n, c, j), i) != x.face(n - 1, x.face(n, c, i), j - 1))
            out.push_back({n, c, i, j});
  return out;
}

std::int64_t euler_characteristic(const SemiSimplicialSet& x) {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < x.num_levels(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(x.size(d));
  return chi;
}

void write_incidence_dump(const SemiSimplicialSet& x, std::ostream& os) {
  for (std::size_t d = 1; d < x.num_levels(); ++d) {
    os << "% boundary " << d << " -> " << d - 1 << '\n';
    boundary_matrix(x, d).write_matrix_market(os);
  }
}

}  // namespace koszul
