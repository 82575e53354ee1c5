#include "koszul/category.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "koszul/errors.hpp"

namespace koszul {

FiniteGradedCategory::FiniteGradedCategory(std::vector<std::string> objects,
                                           std::vector<Morphism> morphisms,
                                           std::vector<MorId> identities,
                                           std::span<const CompositionEntry> composition,
                                           std::optional<int> truncation)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      truncation_(truncation) {
  const std::size_t n = morphisms_.size();
  const std::size_t k = objects_.size();
  if (identities_.size() != k) throw SchemaError("identities", "one identity per object required");
  for (const auto& m : morphisms_) {
    if (m.source.index >= k || m.target.index >= k)
      throw SchemaError("morphisms", "endpoint of '" + m.label + "' is not an object");
    if (m.length < 0) throw SchemaError("morphisms", "negative length on '" + m.label + "'");
    max_length_ = std::max(max_length_, m.length);
  }
  for (std::uint32_t o = 0; o < k; ++o) {
    MorId id = identities_[o];
    if (id.index >= n || morphisms_[id.index].source.index != o || morphisms_[id.index].target.index != o)
      throw SchemaError("identities", "identity of '" + objects_[o] + "' is not an endomorphism of it");
  }

  table_.assign(n * n, -1);
  auto set = [&](MorId first, MorId second, MorId result) {
    if (first.index >= n || second.index >= n || result.index >= n)
      throw SchemaError("compose", "morphism index out of range");
    const auto& f = morphisms_[first.index];
    const auto& g = morphisms_[second.index];
    const auto& r = morphisms_[result.index];
    if (f.target != g.source)
      throw SchemaError("compose", "'" + f.label + "' and '" + g.label + "' are not composable");
    if (r.source != f.source || r.target != g.target)
      throw SchemaError("compose", "composite of '" + f.label + "' and '" + g.label +
                                       "' has wrong endpoints");
    auto& cell = table_[first.index * n + second.index];
    if (cell >= 0 && static_cast<std::uint32_t>(cell) != result.index)
      throw SchemaError("compose", "conflicting composites for '" + f.label + "' and '" + g.label + "'");
    cell = static_cast<std::int32_t>(result.index);
  };
  for (const auto& e : composition) set(e.first, e.second, e.result);
  for (std::uint32_t m = 0; m < n; ++m) {
    MorId id_src = identities_[morphisms_[m].source.index];
    MorId id_tgt = identities_[morphisms_[m].target.index];
    if (table_[id_src.index * n + m] < 0) table_[id_src.index * n + m] = static_cast<std::int32_t>(m);
    if (table_[m * n + id_tgt.index] < 0) table_[m * n + id_tgt.index] = static_cast<std::int32_t>(m);
  }

  hom_.assign(k * k, {});
  for (std::uint32_t m = 0; m < n; ++m)
    hom_[morphisms_[m].source.index * k + morphisms_[m].target.index].push_back(MorId{m});

  decompositions_.assign(n, {});
  for (std::uint32_t f = 0; f < n; ++f) {
    if (is_identity(MorId{f})) continue;
    for (std::uint32_t g = 0; g < n; ++g) {
      std::int32_t r = table_[f * n + g];
      if (r < 0 || is_identity(MorId{g})) continue;
      decompositions_[static_cast<std::size_t>(r)].push_back({MorId{g}, MorId{f}});
    }
  }
}

bool FiniteGradedCategory::is_identity(MorId m) const {
  return identities_.at(morphism(m).source.index) == m;
}

std::optional<MorId> FiniteGradedCategory::compose(MorId first, MorId second) const {
  const std::size_t n = morphisms_.size();
  if (first.index >= n || second.index >= n) return std::nullopt;
  std::int32_t r = table_[first.index * n + second.index];
  if (r < 0) return std::nullopt;
  return MorId{static_cast<std::uint32_t>(r)};
}

bool FiniteGradedCategory::out_of_range(MorId first, MorId second) const {
  return composable(first, second) && !compose(first, second) && truncation_ &&
         length(first) + length(second) > *truncation_;
}

std::span<const MorId> FiniteGradedCategory::hom(ObjId from, ObjId to) const {
  return hom_.at(from.index * objects_.size() + to.index);
}

std::optional<ObjId> FiniteGradedCategory::find_object(std::string_view label) const {
  for (std::uint32_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == label) return ObjId{i};
  return std::nullopt;
}

std::optional<MorId> FiniteGradedCategory::find_morphism(std::string_view label) const {
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].label == label) return MorId{i};
  return std::nullopt;
}

std::vector<CompositionEntry> FiniteGradedCategory::composition_entries() const {
  std::vector<CompositionEntry> out;
  const std::size_t n = morphisms_.size();
  for (std::uint32_t f = 0; f < n; ++f)
    for (std::uint32_t g = 0; g < n; ++g)
      if (std::int32_t r = table_[f * n + g]; r >= 0)
        out.push_back({MorId{f}, MorId{g}, MorId{static_cast<std::uint32_t>(r)}});
  return out;
}

bool operator==(const FiniteGradedCategory& a, const FiniteGradedCategory& b) {
  return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ && a.identities_ == b.identities_ &&
         a.truncation_ == b.truncation_ && a.table_ == b.table_;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Associativity: return "associativity";
    case ViolationKind::LeftIdentity: return "left_identity";
    case ViolationKind::RightIdentity: return "right_identity";
    case ViolationKind::MissingComposite: return "missing_composite";
    case ViolationKind::LengthNotAdditive: return "length_not_additive";
    case ViolationKind::NonIdentityOfLengthZero: return "non_identity_of_length_zero";
    case ViolationKind::IdentityLength: return "identity_length";
  }
  return "unknown";
}

CategoryReport validate(const FiniteGradedCategory& cat) {
  CategoryReport report;
  auto add = [&](ViolationKind kind, std::vector<MorId> witness) {
    report.violations.push_back({kind, std::move(witness)});
  };
  const auto n = static_cast<std::uint32_t>(cat.num_morphisms());

  for (std::uint32_t i = 0; i < n; ++i) {
    MorId m{i};
    if (cat.is_identity(m)) {
      if (cat.length(m) != 0) add(ViolationKind::IdentityLength, {m});
    } else if (cat.length(m) == 0) {
      add(ViolationKind::NonIdentityOfLengthZero, {m});
    }
    if (cat.compose(cat.identity(cat.source(m)), m) != m)
      add(ViolationKind::LeftIdentity, {cat.identity(cat.source(m)), m});
    if (cat.compose(m, cat.identity(cat.target(m))) != m)
      add(ViolationKind::RightIdentity, {m, cat.identity(cat.target(m))});
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      MorId f{i}, g{j};
      if (!cat.composable(f, g)) continue;
      auto gf = cat.compose(f, g);
      if (!gf) {
        if (!cat.out_of_range(f, g)) add(ViolationKind::MissingComposite, {f, g});
        continue;
      }
      if (cat.length(*gf) != cat.length(f) + cat.length(g)) add(ViolationKind::LengthNotAdditive, {f, g});
    }
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      MorId f{i}, g{j};
      if (!cat.composable(f, g)) continue;
      auto gf = cat.compose(f, g);
      for (std::uint32_t l = 0; l < n; ++l) {
        MorId h{l};
        if (!cat.composable(g, h)) continue;
        auto hg = cat.compose(g, h);
        std::optional<MorId> left = gf ? cat.compose(*gf, h) : std::nullopt;
        std::optional<MorId> right = hg ? cat.compose(f, *hg) : std::nullopt;
        if (left == right) continue;
        // both sides dropped by truncation is fine; anything else is a defect
        bool left_dropped = !left && (!gf || cat.out_of_range(*gf, h));
        bool right_dropped = !right && (!hg || cat.out_of_range(f, *hg));
        if (left_dropped && right_dropped) continue;
        add(ViolationKind::Associativity, {f, g, h});
      }
    }
  }
  return report;
}

namespace {

FiniteGradedCategory full_subcategory(const FiniteGradedCategory& cat, const std::vector<ObjId>& keep) {
  std::vector<std::int64_t> new_obj(cat.num_objects(), -1);
  std::vector<std::string> objects;
  for (ObjId o : keep) {
    new_obj[o.index] = static_cast<std::int64_t>(objects.size());
    objects.push_back(cat.object_label(o));
  }
  std::vector<std::int64_t> new_mor(cat.num_morphisms(), -1);
  std::vector<Morphism> morphisms;
  for (std::uint32_t i = 0; i < cat.num_morphisms(); ++i) {
    const auto& m = cat.morphism(MorId{i});
    if (new_obj[m.source.index] < 0 || new_obj[m.target.index] < 0) continue;
    new_mor[i] = static_cast<std::int64_t>(morphisms.size());
    morphisms.push_back({ObjId{static_cast<std::uint32_t>(new_obj[m.source.index])},
                         ObjId{static_cast<std::uint32_t>(new_obj[m.target.index])}, m.length, m.label});
  }
  auto mor = [&](MorId m) { return MorId{static_cast<std::uint32_t>(new_mor[m.index])}; };
  std::vector<MorId> identities;
  for (ObjId o : keep) identities.push_back(mor(cat.identity(o)));
  std::vector<CompositionEntry> entries;
  for (const auto& e : cat.composition_entries())
    if (new_mor[e.first.index] >= 0 && new_mor[e.second.index] >= 0)
      entries.push_back({mor(e.first), mor(e.second), mor(e.result)});
  return FiniteGradedCategory(std::move(objects), std::move(morphisms), std::move(identities), entries,
                              cat.truncation());
}

}  // namespace

FiniteGradedCategory skeletalize(const FiniteGradedCategory& cat) {
  const auto k = static_cast<std::uint32_t>(cat.num_objects());
  std::vector<std::uint32_t> rep(k);
  std::iota(rep.begin(), rep.end(), 0u);
  for (std::uint32_t a = 0; a < k; ++a) {
    if (rep[a] != a) continue;
    for (std::uint32_t b = a + 1; b < k; ++b) {
      if (rep[b] != b) continue;
      bool iso = false;
      for (MorId f : cat.hom(ObjId{a}, ObjId{b})) {
        if (cat.length(f) != 0) continue;
        for (MorId g : cat.hom(ObjId{b}, ObjId{a}))
          if (cat.compose(f, g) == cat.identity(ObjId{a}) && cat.compose(g, f) == cat.identity(ObjId{b}))
            iso = true;
      }
      if (iso) rep[b] = a;
    }
  }
  std::vector<ObjId> keep;
  for (std::uint32_t a = 0; a < k; ++a)
    if (rep[a] == a) keep.push_back(ObjId{a});
  return full_subcategory(cat, keep);
}

FiniteGradedCategory opposite(const FiniteGradedCategory& cat) {
  std::vector<Morphism> morphisms = cat.morphisms();
  for (auto& m : morphisms) std::swap(m.source, m.target);
  std::vector<CompositionEntry> entries;
  for (const auto& e : cat.composition_entries()) entries.push_back({e.second, e.first, e.result});
  return FiniteGradedCategory(cat.object_labels(), std::move(morphisms), cat.identities(), entries,
                              cat.truncation());
}

FiniteGradedCategory product(const FiniteGradedCategory& a, const FiniteGradedCategory& b) {
  const auto ka = a.num_objects(), kb = b.num_objects();
  const auto na = static_cast<std::uint32_t>(a.num_morphisms());
  const auto nb = static_cast<std::uint32_t>(b.num_morphisms());
  std::vector<std::string> objects;
  for (std::uint32_t i = 0; i < ka; ++i)
    for (std::uint32_t j = 0; j < kb; ++j)
      objects.push_back("(" + a.object_label(ObjId{i}) + "," + b.object_label(ObjId{j}) + ")");
  auto obj = [&](ObjId x, ObjId y) { return ObjId{static_cast<std::uint32_t>(x.index * kb + y.index)}; };
  auto mor = [&](MorId x, MorId y) { return MorId{x.index * nb + y.index}; };

  std::vector<Morphism> morphisms;
  for (std::uint32_t i = 0; i < na; ++i) {
    for (std::uint32_t j = 0; j < nb; ++j) {
      const auto& f = a.morphism(MorId{i});
      const auto& g = b.morphism(MorId{j});
      morphisms.push_back({obj(f.source, g.source), obj(f.target, g.target), f.length + g.length,
                           "(" + f.label + "," + g.label + ")"});
    }
  }
  std::vector<MorId> identities;
  for (std::uint32_t i = 0; i < ka; ++i)
    for (std::uint32_t j = 0; j < kb; ++j) identities.push_back(mor(a.identity(ObjId{i}), b.identity(ObjId{j})));

  std::vector<CompositionEntry> entries;
  const auto ea = a.composition_entries();
  const auto eb = b.composition_entries();
  for (const auto& x : ea)
    for (const auto& y : eb) entries.push_back({mor(x.first, y.first), mor(x.second, y.second), mor(x.result, y.result)});

  std::optional<int> truncation;
  if (a.truncation() && b.truncation())
    truncation = std::min(*a.truncation(), *b.truncation());
  else if (a.truncation())
    truncation = a.truncation();
  else
    truncation = b.truncation();
  return FiniteGradedCategory(std::move(objects), std::move(morphisms), std::move(identities), entries,
                              truncation);
}

}  // namespace koszul
