#include "koszul/rs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

std::string interval_label(const FinitePoset& p, Interval i) {
  return "[" + p.label(i.lo) + "," + p.label(i.hi) + "]";
}

}  // namespace

IntervalRelation::IntervalRelation(const FinitePoset& poset, const std::vector<std::vector<Interval>>& classes)
    : n_(poset.size()), class_(n_ * n_, -1) {
  // provisional ids: listed classes first, then singletons
  std::vector<std::int64_t> provisional(n_ * n_, -1);
  std::int64_t next = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) continue;
    for (auto iv : cls) {
      if (iv.lo >= n_ || iv.hi >= n_ || !poset.leq(iv.lo, iv.hi))
        throw SchemaError("classes", "pair is not an interval of the poset");
      auto& slot = provisional[iv.lo * n_ + iv.hi];
      if (slot >= 0) fail(ErrorKind::NotAPartition, interval_label(poset, iv) + " appears in two classes");
      slot = next;
    }
    ++next;
  }
  std::map<std::int64_t, std::uint32_t> renumber;
  for (auto [a, b] : poset.comparable_pairs()) {
    auto& slot = provisional[a * n_ + b];
    if (slot < 0) slot = next++;
    auto [it, fresh] = renumber.emplace(slot, static_cast<std::uint32_t>(members_.size()));
    if (fresh) members_.emplace_back();
    class_[a * n_ + b] = it->second;
    members_[it->second].push_back({a, b});
  }
}

IntervalRelation IntervalRelation::identity(const FinitePoset& poset) { return IntervalRelation(poset, {}); }

std::uint32_t IntervalRelation::class_of(Interval i) const {
  if (i.lo >= n_ || i.hi >= n_ || class_[i.lo * n_ + i.hi] < 0)
    fail(ErrorKind::InvariantViolation, "not an interval of the poset");
  return static_cast<std::uint32_t>(class_[i.lo * n_ + i.hi]);
}

namespace {

struct Chain {
  std::uint32_t a, b, c;
};

std::vector<Chain> chains3(const FinitePoset& p) {
  std::vector<Chain> out;
  const auto n = static_cast<std::uint32_t>(p.size());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (p.leq(a, b))
        for (std::uint32_t c = 0; c < n; ++c)
          if (p.leq(b, c)) out.push_back({a, b, c});
  return out;
}

// (class of lower, class of upper) -> classes of the composite interval
using Realized = std::map<std::pair<std::uint32_t, std::uint32_t>, std::set<std::uint32_t>>;

Realized realized_products(const FinitePoset& p, const IntervalRelation& rel) {
  Realized out;
  for (auto [a, b, c] : chains3(p)) out[{rel.class_of(a, b), rel.class_of(b, c)}].insert(rel.class_of(a, c));
  return out;
}

}  // namespace

RsAxiomReport verify_rs_axioms(const FinitePoset& p, const IntervalRelation& rel, std::size_t witness_limit) {
  RsAxiomReport report;
  const auto chains = chains3(p);

  // A1: chains with the same (lower, upper) classes have the same composite class
  std::map<std::pair<std::uint32_t, std::uint32_t>, Chain> first_seen;
  for (const auto& ch : chains) {
    auto key = std::pair{rel.class_of(ch.a, ch.b), rel.class_of(ch.b, ch.c)};
    auto [it, fresh] = first_seen.emplace(key, ch);
    if (fresh || rel.class_of(it->second.a, it->second.c) == rel.class_of(ch.a, ch.c)) continue;
    report.a1 = false;
    if (report.a1_witnesses.size() < witness_limit)
      report.a1_witnesses.push_back({{it->second.a, it->second.b}, {ch.a, ch.b}, {it->second.b, it->second.c}, {ch.b, ch.c}});
  }

  // A2: for equivalent intervals, each c has exactly one partner c' with matching class pair
  for (std::uint32_t cls = 0; cls < rel.num_classes(); ++cls) {
    const auto& members = rel.members(cls);
    for (auto src : members) {
      for (auto dst : members) {
        std::map<std::uint32_t, std::uint32_t> tau;
        for (std::uint32_t c = 0; c < p.size(); ++c) {
          if (!p.leq(src.lo, c) || !p.leq(c, src.hi)) continue;
          std::vector<std::uint32_t> candidates;
          for (std::uint32_t d = 0; d < p.size(); ++d)
            if (p.leq(dst.lo, d) && p.leq(d, dst.hi) && rel.class_of(dst.lo, d) == rel.class_of(src.lo, c) &&
                rel.class_of(d, dst.hi) == rel.class_of(c, src.hi))
              candidates.push_back(d);
          if (candidates.size() == 1) {
            tau[c] = candidates.front();
            continue;
          }
          report.a2 = false;
          if (report.a2_witnesses.size() < witness_limit) report.a2_witnesses.push_back({src, dst, c, candidates.size()});
        }
        if (!report.tau_monotone) continue;
        for (auto [c1, t1] : tau)
          for (auto [c2, t2] : tau)
            if (p.leq(c1, c2) && !p.leq(t1, t2)) {
              report.tau_monotone = false;
              report.monotonicity_witness = A2Witness{src, dst, c1, 1};
            }
      }
    }
  }

  // A4: point-equivalent b1 ~ b2 lets [a,b1] and [b2,c] be realized by one chain
  const auto realized = realized_products(p, rel);
  for (auto [a, b1] : p.comparable_pairs()) {
    for (auto [b2, c] : p.comparable_pairs()) {
      if (rel.class_of(b1, b1) != rel.class_of(b2, b2)) continue;
      if (realized.contains({rel.class_of(a, b1), rel.class_of(b2, c)})) continue;
      report.a4 = false;
      if (report.a4_witnesses.size() < witness_limit) report.a4_witnesses.push_back({{a, b1}, {b2, c}});
    }
  }
  return report;
}

FiniteGradedCategory rs_quotient(const FinitePoset& p, const IntervalRelation& rel) {
  if (!verify_rs_axioms(p, rel, 1).ok()) fail(ErrorKind::AxiomsNotVerified, "relation fails the axioms");
  if (!is_graded(p)) fail(ErrorKind::NotGraded, "quotient lengths need a graded poset");

  const auto k = static_cast<std::uint32_t>(rel.num_classes());
  std::map<std::uint32_t, std::uint32_t> object_of_point_class;
  std::vector<std::string> objects;
  std::vector<MorId> identities;
  for (std::uint32_t cls = 0; cls < k; ++cls) {
    const auto& members = rel.members(cls);
    auto is_point = [](Interval i) { return i.lo == i.hi; };
    if (std::none_of(members.begin(), members.end(), is_point)) continue;
    if (!std::all_of(members.begin(), members.end(), is_point))
      fail(ErrorKind::AxiomsNotVerified, "point interval equivalent to a longer interval");
    object_of_point_class.emplace(cls, static_cast<std::uint32_t>(objects.size()));
    objects.push_back("[" + p.label(members.front().lo) + "]");
    identities.push_back(MorId{cls});
  }

  std::vector<Morphism> morphisms;
  for (std::uint32_t cls = 0; cls < k; ++cls) {
    const auto& members = rel.members(cls);
    const auto rep = members.front();
    const int len = p.chain_length(rep.lo, rep.hi);
    const auto src = rel.class_of(rep.lo, rep.lo), tgt = rel.class_of(rep.hi, rep.hi);
    for (auto m : members) {
      if (p.chain_length(m.lo, m.hi) != len)
        fail(ErrorKind::LengthNotConstantOnClass,
             interval_label(p, rep) + " and " + interval_label(p, m) + " have different lengths");
      if (rel.class_of(m.lo, m.lo) != src || rel.class_of(m.hi, m.hi) != tgt)
        fail(ErrorKind::AxiomsNotVerified, "endpoints of " + interval_label(p, m) + " are not equivalent to those of " +
                                               interval_label(p, rep));
    }
    morphisms.push_back({ObjId{object_of_point_class.at(src)}, ObjId{object_of_point_class.at(tgt)}, len,
                         interval_label(p, rep)});
  }

  std::vector<CompositionEntry> entries;
  for (const auto& [key, results] : realized_products(p, rel)) {
    if (results.size() != 1) fail(ErrorKind::InvariantViolation, "quotient composition is not well defined");
    entries.push_back({MorId{key.first}, MorId{key.second}, MorId{*results.begin()}});
  }
  return FiniteGradedCategory(std::move(objects), std::move(morphisms), std::move(identities), entries);
}

std::optional<std::uint32_t> ReducedIncidenceAlgebra::multiply(std::uint32_t a, std::uint32_t b) const {
  auto r = product.at(a * dimension + b);
  if (r < 0) return std::nullopt;
  return static_cast<std::uint32_t>(r);
}

ReducedIncidenceAlgebra reduced_incidence_algebra(const FinitePoset& p, const IntervalRelation& rel) {
  ReducedIncidenceAlgebra alg;
  alg.dimension = rel.num_classes();
  alg.product.assign(alg.dimension * alg.dimension, -1);
  for (const auto& [key, results] : realized_products(p, rel)) {
    if (results.size() != 1)
      fail(ErrorKind::IllDefinedProduct, "product of classes " + std::to_string(key.first) + " and " +
                                             std::to_string(key.second) + " is not well defined");
    alg.product[key.first * alg.dimension + key.second] = *results.begin();
  }
  if (!verify_rs_axioms(p, rel, 1).ok() || !is_graded(p)) return alg;

  // phi: quotient morphism i -> xi_i must turn composition into the opposite product
  const auto q = rs_quotient(p, rel);
  const auto n = static_cast<std::uint32_t>(q.num_morphisms());
  alg.op_isomorphic = true;
  for (std::uint32_t first = 0; first < n; ++first) {
    for (std::uint32_t second = 0; second < n; ++second) {
      auto composite = q.compose(MorId{first}, MorId{second});
      auto xi = alg.multiply(first, second);
      bool match = composite ? (xi && *xi == composite->index) : !xi;
      if (match) continue;
      alg.op_isomorphic = false;
      alg.iso_failures.emplace_back(first, second);
    }
  }
  return alg;
}

void validate_functor(const Functor& f) {
  const auto& c = f.domain;
  const auto& d = f.codomain;
  if (f.object_map.size() != c.num_objects() || f.morphism_map.size() != c.num_morphisms())
    fail(ErrorKind::NotAFunctor, "map sizes do not match the domain");
  for (auto o : f.object_map)
    if (o.index >= d.num_objects()) fail(ErrorKind::NotAFunctor, "object image out of range");
  for (auto m : f.morphism_map)
    if (m.index >= d.num_morphisms()) fail(ErrorKind::NotAFunctor, "morphism image out of range");
  for (std::uint32_t o = 0; o < c.num_objects(); ++o)
    if (f.morphism_map[c.identity(ObjId{o}).index] != d.identity(f.object_map[o]))
      fail(ErrorKind::NotAFunctor, "identity of '" + c.object_label(ObjId{o}) + "' is not preserved");
  for (std::uint32_t m = 0; m < c.num_morphisms(); ++m) {
    const auto& src = c.morphism(MorId{m});
    const auto& img = d.morphism(f.morphism_map[m]);
    if (img.source != f.object_map[src.source.index] || img.target != f.object_map[src.target.index])
      fail(ErrorKind::NotAFunctor, "endpoints of '" + src.label + "' are not preserved");
    if (img.length != src.length) fail(ErrorKind::NotAFunctor, "length of '" + src.label + "' is not preserved");
  }
  for (const auto& e : c.composition_entries()) {
    auto image = d.compose(f.morphism_map[e.first.index], f.morphism_map[e.second.index]);
    if (image != f.morphism_map[e.result.index])
      fail(ErrorKind::NotAFunctor, "composite '" + c.morphism(e.result).label + "' is not preserved");
  }
}

Functor identity_functor(const FiniteGradedCategory& cat) {
  Functor f{cat, cat, {}, {}};
  for (std::uint32_t o = 0; o < cat.num_objects(); ++o) f.object_map.push_back(ObjId{o});
  for (std::uint32_t m = 0; m < cat.num_morphisms(); ++m) f.morphism_map.push_back(MorId{m});
  return f;
}

bool is_isomorphism(const Functor& f) {
  validate_functor(f);
  std::set<ObjId> objs(f.object_map.begin(), f.object_map.end());
  std::set<MorId> mors(f.morphism_map.begin(), f.morphism_map.end());
  return objs.size() == f.codomain.num_objects() && objs.size() == f.object_map.size() &&
         mors.size() == f.codomain.num_morphisms() && mors.size() == f.morphism_map.size();
}

AlmostDiscreteVerdict is_almost_discrete_fibration(const Functor& f) {
  validate_functor(f);
  AlmostDiscreteVerdict verdict;
  FactorizationEngine up(f.domain), down(f.codomain);
  std::vector<MorId> order;
  for (std::uint32_t m = 0; m < f.domain.num_morphisms(); ++m)
    if (!f.domain.is_identity(MorId{m})) order.push_back(MorId{m});
  std::stable_sort(order.begin(), order.end(),
                   [&](MorId a, MorId b) { return f.domain.length(a) < f.domain.length(b); });
  for (MorId p : order) {
    const MorId q = f.morphism_map[p.index];
    for (std::size_t parts = 2; static_cast<int>(parts) <= f.domain.length(p); ++parts) {
      std::map<FactorSequence, std::vector<FactorSequence>> lifts;
      for (const auto& seq : down.factorizations(q, parts)) lifts[seq];
      for (const auto& seq : up.factorizations(p, parts)) {
        FactorSequence image;
        for (auto m : seq) image.push_back(f.morphism_map[m.index]);
        lifts[image].push_back(seq);
      }
      for (auto& [image, found] : lifts) {
        if (found.size() == 1) continue;
        verdict.almost_discrete = false;
        verdict.witness = AlmostDiscreteWitness{p, image, std::move(found)};
        return verdict;
      }
    }
  }
  return verdict;
}

DiscreteVerdict is_discrete_fibration(const Functor& f) {
  validate_functor(f);
  DiscreteVerdict verdict;
  for (std::uint32_t e = 0; e < f.domain.num_objects(); ++e) {
    const ObjId image = f.object_map[e];
    for (std::uint32_t m = 0; m < f.codomain.num_morphisms(); ++m) {
      if (f.codomain.target(MorId{m}) != image) continue;
      std::vector<MorId> lifts;
      for (std::uint32_t g = 0; g < f.domain.num_morphisms(); ++g)
        if (f.domain.target(MorId{g}) == ObjId{e} && f.morphism_map[g] == MorId{m}) lifts.push_back(MorId{g});
      if (lifts.size() == 1) continue;
      verdict.discrete = false;
      verdict.witness = DiscreteWitness{ObjId{e}, MorId{m}, std::move(lifts)};
      return verdict;
    }
  }
  return verdict;
}

IntervalRelation relation_from_fibration(const FinitePoset& poset, const Functor& f) {
  const auto pairs = poset.comparable_pairs();
  if (pairs.size() != f.domain.num_morphisms())
    fail(ErrorKind::NotAFunctor, "domain is not the category of the poset");
  std::vector<bool> hit(f.codomain.num_morphisms(), false);
  for (auto m : f.morphism_map) hit.at(m.index) = true;
  for (std::uint32_t m = 0; m < hit.size(); ++m)
    if (!hit[m])
      fail(ErrorKind::NotSurjectiveOnMorphisms, "'" + f.codomain.morphism(MorId{m}).label + "' has no lift");
  if (!is_almost_discrete_fibration(f).almost_discrete)
    fail(ErrorKind::NotAlmostDiscrete, "functor is not an almost discrete fibration");
  std::map<std::uint32_t, std::vector<Interval>> by_image;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    by_image[f.morphism_map[i].index].push_back({pairs[i].first, pairs[i].second});
  std::vector<std::vector<Interval>> classes;
  for (auto& [image, members] : by_image) classes.push_back(std::move(members));
  return IntervalRelation(poset, classes);
}

Functor quotient_comparison(const FinitePoset& poset, const IntervalRelation& rel, const Functor& f) {
  Functor out{rs_quotient(poset, rel), f.codomain, {}, {}};
  const auto pairs = poset.comparable_pairs();
  std::map<Interval, std::uint32_t> index;
  for (std::uint32_t i = 0; i < pairs.size(); ++i) index[{pairs[i].first, pairs[i].second}] = i;
  for (std::uint32_t cls = 0; cls < rel.num_classes(); ++cls) {
    const auto rep = rel.members(cls).front();
    out.morphism_map.push_back(f.morphism_map[index.at(rep)]);
    if (rep.lo == rep.hi) out.object_map.push_back(f.object_map[rep.lo]);
  }
  return out;
}

namespace {

bool divides(const FiniteGradedCategory& cat, MorId p, MorId q) {
  if (cat.source(p) != cat.source(q)) return false;
  for (MorId r : cat.hom(cat.target(p), cat.target(q)))
    if (cat.compose(p, r) == q) return true;
  return false;
}

}  // namespace

FinitePoset path_poset(const FiniteGradedCategory& cat, ObjId v) {
  if (v.index >= cat.num_objects()) fail(ErrorKind::UnknownObject, "object index " + std::to_string(v.index));
  std::vector<MorId> elements;
  for (std::uint32_t m = 0; m < cat.num_morphisms(); ++m)
    if (cat.source(MorId{m}) == v) elements.push_back(MorId{m});
  std::vector<std::string> labels;
  for (auto m : elements) labels.push_back(cat.morphism(m).label);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> relations;
  for (std::uint32_t i = 0; i < elements.size(); ++i)
    for (std::uint32_t j = 0; j < elements.size(); ++j)
      if (i != j && divides(cat, elements[i], elements[j])) relations.emplace_back(i, j);
  return FinitePoset(std::move(labels), relations);
}

PathPosetProjection path_poset_projection(const FiniteGradedCategory& cat) {
  const auto n = static_cast<std::uint32_t>(cat.num_morphisms());
  std::vector<std::string> labels;
  for (std::uint32_t m = 0; m < n; ++m) labels.push_back(cat.morphism(MorId{m}).label);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> relations;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (i != j && divides(cat, MorId{i}, MorId{j})) relations.emplace_back(i, j);
  FinitePoset poset(std::move(labels), relations);

  Functor projection{poset_to_category(poset), cat, {}, {}};
  for (std::uint32_t i = 0; i < n; ++i) projection.object_map.push_back(cat.target(MorId{i}));
  for (auto [p, q] : poset.comparable_pairs()) {
    std::vector<MorId> quotients;
    for (MorId r : cat.hom(cat.target(MorId{p}), cat.target(MorId{q})))
      if (cat.compose(MorId{p}, r) == MorId{q}) quotients.push_back(r);
    if (quotients.size() != 1)
      fail(ErrorKind::NonCancellative, "'" + cat.morphism(MorId{q}).label + "' / '" + cat.morphism(MorId{p}).label +
                                           "' is not unique");
    projection.morphism_map.push_back(quotients.front());
  }
  return {std::move(poset), std::move(projection)};
}

}  // namespace koszul
