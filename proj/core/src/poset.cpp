#include "koszul/poset.hpp"

#include <algorithm>
#include <functional>

#include "koszul/errors.hpp"
#include "koszul/factorization.hpp"

namespace koszul {

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         std::span<const std::pair<std::uint32_t, std::uint32_t>> relations)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels_[i] == labels_[j]) throw SchemaError("elements", "duplicate element '" + labels_[i] + "'");
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw SchemaError("relations", "element index out of range");
    leq_[a * n + b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i * n + j] && leq_[j * n + i])
        fail(ErrorKind::NotAPoset, "'" + labels_[i] + "' and '" + labels_[j] + "' lie on a cycle");
}

std::optional<std::uint32_t> FinitePoset::find(std::string_view label) const {
  for (std::uint32_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool FinitePoset::covers(std::uint32_t a, std::uint32_t b) const {
  if (!less(a, b)) return false;
  for (std::uint32_t c = 0; c < size(); ++c)
    if (less(a, c) && less(c, b)) return false;
  return true;
}

std::vector<std::uint32_t> FinitePoset::open_interval(std::uint32_t a, std::uint32_t b) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < size(); ++c)
    if (less(a, c) && less(c, b)) out.push_back(c);
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FinitePoset::comparable_pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t a = 0; a < size(); ++a)
    for (std::uint32_t b = 0; b < size(); ++b)
      if (leq(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FinitePoset::cover_relations() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t a = 0; a < size(); ++a)
    for (std::uint32_t b = 0; b < size(); ++b)
      if (covers(a, b)) out.emplace_back(a, b);
  return out;
}

namespace {

// shortest and longest cover-path lengths from a to every element above it
std::pair<std::vector<int>, std::vector<int>> path_lengths(const FinitePoset& p, std::uint32_t a) {
  const auto n = static_cast<std::uint32_t>(p.size());
  std::vector<std::uint32_t> above;
  for (std::uint32_t x = 0; x < n; ++x)
    if (p.leq(a, x)) above.push_back(x);
  // a linear extension: sort by number of elements below
  std::vector<int> below(n, 0);
  for (auto x : above)
    for (std::uint32_t y = 0; y < n; ++y)
      if (p.less(y, x)) ++below[x];
  std::sort(above.begin(), above.end(), [&](auto x, auto y) { return below[x] < below[y]; });
  std::vector<int> shortest(n, -1), longest(n, -1);
  shortest[a] = longest[a] = 0;
  for (auto x : above) {
    if (x == a) continue;
    for (auto y : above) {
      if (!p.covers(y, x) || longest[y] < 0) continue;
      shortest[x] = shortest[x] < 0 ? shortest[y] + 1 : std::min(shortest[x], shortest[y] + 1);
      longest[x] = std::max(longest[x], longest[y] + 1);
    }
  }
  return {shortest, longest};
}

}  // namespace

int FinitePoset::chain_length(std::uint32_t a, std::uint32_t b) const {
  if (!leq(a, b)) fail(ErrorKind::InvariantViolation, "chain_length needs a <= b");
  return path_lengths(*this, a).second[b];
}

bool is_graded(const FinitePoset& poset) {
  for (std::uint32_t a = 0; a < poset.size(); ++a) {
    auto [shortest, longest] = path_lengths(poset, a);
    if (shortest != longest) return false;
  }
  return true;
}

void SimplicialComplex::add_face(Face face) {
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  for (auto v : face)
    if (v >= labels_.size()) fail(ErrorKind::InvariantViolation, "face vertex out of range");
  if (face.empty() || faces_.contains(face)) return;
  faces_.insert(face);
  for (std::size_t i = 0; i < face.size(); ++i) {
    Face sub = face;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
    add_face(std::move(sub));
  }
}

bool SimplicialComplex::contains(const Face& face) const {
  if (face.empty()) return true;
  Face sorted = face;
  std::sort(sorted.begin(), sorted.end());
  return faces_.contains(sorted);
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (const auto& f : faces_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  return dim;
}

SemiSimplicialSet SimplicialComplex::to_semisimplicial() const {
  SemiSimplicialSet out;
  std::vector<std::vector<const Face*>> by_dim(static_cast<std::size_t>(dimension() + 1));
  for (const auto& f : faces_) by_dim[f.size() - 1].push_back(&f);
  // std::set order is lexicographic, so index lookup is a binary search per dimension
  auto index_of = [&](std::size_t dim, const Face& f) {
    auto& level = by_dim[dim];
    auto it = std::lower_bound(level.begin(), level.end(), f, [](const Face* x, const Face& y) { return *x < y; });
    return static_cast<std::uint32_t>(it - level.begin());
  };
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    std::vector<std::uint32_t> faces(d == 0 ? 0 : d + 1);
    for (const Face* f : by_dim[d]) {
      for (std::size_t i = 0; d > 0 && i <= d; ++i) {
        Face sub = *f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        faces[i] = index_of(d - 1, sub);
      }
      out.add_cell(d, faces);
    }
  }
  return out;
}

namespace {

SimplicialComplex chains_of(const FinitePoset& poset, const std::vector<std::uint32_t>& elements) {
  std::vector<std::string> labels;
  for (auto e : elements) labels.push_back(poset.label(e));
  SimplicialComplex complex(labels);
  // the element sets are convex, so maximal chains are cover paths from minimal elements
  std::vector<std::uint32_t> chain;
  std::function<void(std::size_t)> extend = [&](std::size_t last) {
    bool extended = false;
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (!poset.covers(elements[last], elements[j])) continue;
      extended = true;
      chain.push_back(static_cast<std::uint32_t>(j));
      extend(j);
      chain.pop_back();
    }
    if (!extended) complex.add_face(chain);
  };
  for (std::size_t i = 0; i < elements.size(); ++i) {
    bool minimal = std::none_of(elements.begin(), elements.end(), [&](auto e) { return poset.less(e, elements[i]); });
    if (!minimal) continue;
    chain.assign(1, static_cast<std::uint32_t>(i));
    extend(i);
  }
  return complex;
}

}  // namespace

SimplicialComplex order_complex(const FinitePoset& poset) {
  std::vector<std::uint32_t> all(poset.size());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  return chains_of(poset, all);
}

SimplicialComplex order_complex(const FinitePoset& poset, std::uint32_t a, std::uint32_t b) {
  return chains_of(poset, poset.open_interval(a, b));
}

SimplicialComplex link(const SimplicialComplex& complex, const SimplicialComplex::Face& face) {
  if (!complex.contains(face)) fail(ErrorKind::FaceNotInComplex, "face is not in the complex");
  SimplicialComplex out(complex.vertex_labels());
  std::vector<std::uint32_t> f = face;
  std::sort(f.begin(), f.end());
  for (const auto& g : complex.faces()) {
    if (!std::includes(g.begin(), g.end(), f.begin(), f.end())) continue;
    SimplicialComplex::Face rest;
    std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
    out.add_face(std::move(rest));
  }
  return out;
}

CmResult is_cohen_macaulay(const SimplicialComplex& complex, const Field& field) {
  CmResult result;
  std::vector<SimplicialComplex::Face> all{{}};
  all.insert(all.end(), complex.faces().begin(), complex.faces().end());
  for (const auto& f : all) {
    auto lk = link(complex, f);
    auto profile = reduced_cohomology(lk.to_semisimplicial(), field);
    const int dim = lk.dimension();
    for (const auto& [degree, value] : profile.reduced_betti) {
      if (value != 0 && degree < dim) {
        result.cohen_macaulay = false;
        result.witness_face = f;
        result.witness_profile = profile;
        return result;
      }
    }
  }
  return result;
}

LocalCmResult is_locally_cohen_macaulay(const FinitePoset& poset, const Field& field) {
  LocalCmResult result;
  for (auto [a, b] : poset.comparable_pairs()) {
    if (a == b) continue;
    auto cm = is_cohen_macaulay(order_complex(poset, a, b), field);
    if (!cm.cohen_macaulay) {
      result.locally_cohen_macaulay = false;
      result.witness_interval = std::pair{a, b};
      result.detail = std::move(cm);
      return result;
    }
  }
  return result;
}

FiniteGradedCategory poset_to_category(const FinitePoset& poset) {
  if (!is_graded(poset)) fail(ErrorKind::NotGraded, "poset is not graded");
  const auto n = static_cast<std::uint32_t>(poset.size());
  std::vector<std::int64_t> index(static_cast<std::size_t>(n) * n, -1);
  std::vector<Morphism> morphisms;
  std::vector<MorId> identities(n);
  for (auto [a, b] : poset.comparable_pairs()) {
    index[a * n + b] = static_cast<std::int64_t>(morphisms.size());
    if (a == b) identities[a] = MorId{static_cast<std::uint32_t>(morphisms.size())};
    morphisms.push_back({ObjId{a}, ObjId{b}, poset.chain_length(a, b), "[" + poset.label(a) + "," + poset.label(b) + "]"});
  }
  auto mor = [&](std::uint32_t a, std::uint32_t b) { return MorId{static_cast<std::uint32_t>(index[a * n + b])}; };
  std::vector<CompositionEntry> entries;
  for (auto [a, b] : poset.comparable_pairs())
    for (std::uint32_t c = 0; c < n; ++c)
      if (poset.leq(b, c)) entries.push_back({mor(a, b), mor(b, c), mor(a, c)});
  return FiniteGradedCategory(poset.labels(), std::move(morphisms), std::move(identities), entries);
}

bool verify_interval_equals_factorization(const FinitePoset& poset, std::uint32_t a, std::uint32_t b,
                                          const Field& field) {
  if (!poset.less(a, b)) fail(ErrorKind::InvariantViolation, "interval needs a < b");
  const auto cat = poset_to_category(poset);
  const auto p = cat.find_morphism("[" + poset.label(a) + "," + poset.label(b) + "]");
  const auto space = factorization_space(cat, *p);
  const auto ordered = order_complex(poset, a, b).to_semisimplicial();
  for (std::size_t d = 0; d < std::max(space.complex.num_levels(), ordered.num_levels()); ++d)
    if (space.complex.size(d) != ordered.size(d)) return false;
  return reduced_cohomology(space.complex, field) == reduced_cohomology(ordered, field);
}

}  // namespace koszul
