#include "koszul/koszul.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "koszul/factorization.hpp"
#include "koszul/linalg.hpp"

namespace koszul {

namespace {

void add_profile(ExtDims& out, const BettiProfile& profile) {
  for (const auto& [j, b] : profile.reduced_betti)
    if (b != 0) out[j + 2] += b;
}

// non-identities ordered by (length, index)
std::vector<MorId> graded_order(const FiniteGradedCategory& cat) {
  std::vector<MorId> out;
  for (std::uint32_t m = 0; m < cat.num_morphisms(); ++m)
    if (!cat.is_identity(MorId{m})) out.push_back(MorId{m});
  std::stable_sort(out.begin(), out.end(), [&](MorId a, MorId b) { return cat.length(a) < cat.length(b); });
  return out;
}

}  // namespace

ExtDims ext_simples(const FiniteGradedCategory& cat, ObjId to, ObjId from, int length, const Field& field) {
  ExtDims out;
  if (length < 0) return out;
  if (length == 0) {
    if (to == from) out[0] = 1;
    return out;
  }
  FactorizationEngine engine(cat);
  for (MorId p : cat.hom(from, to))
    if (cat.length(p) == length && !cat.is_identity(p))
      add_profile(out, reduced_cohomology(engine.space(p).complex, field));
  return out;
}

namespace {

// Tuples (f1, ..., fr) of non-identities, f1 outermost, with stored composite p.
std::vector<std::vector<std::vector<MorId>>> bar_generators(const FiniteGradedCategory& cat, MorId p) {
  std::vector<MorId> arrows;
  for (std::uint32_t m = 0; m < cat.num_morphisms(); ++m)
    if (!cat.is_identity(MorId{m}) && cat.length(MorId{m}) <= cat.length(p)) arrows.push_back(MorId{m});
  std::vector<std::vector<std::vector<MorId>>> by_rank(static_cast<std::size_t>(cat.length(p)) + 1);
  std::vector<MorId> tuple;
  // grow from the innermost factor; `acc` is the composite so far
  std::function<void(MorId, int)> grow = [&](MorId acc, int len) {
    if (acc == p) {
      by_rank[tuple.size()].emplace_back(tuple.rbegin(), tuple.rend());
    }
    for (MorId g : arrows) {
      if (len + cat.length(g) > cat.length(p)) continue;
      auto next = cat.compose(acc, g);
      if (!next) continue;
      tuple.push_back(g);
      grow(*next, len + cat.length(g));
      tuple.pop_back();
    }
  };
  for (MorId g : arrows) {
    if (cat.source(g) != cat.source(p)) continue;
    tuple.push_back(g);
    grow(g, cat.length(g));
    tuple.pop_back();
  }
  for (auto& level : by_rank) std::sort(level.begin(), level.end());
  return by_rank;
}

}  // namespace

ExtDims ext_oracle_resolution(const FiniteGradedCategory& cat, ObjId to, ObjId from, int length,
                              const Field& field) {
  ExtDims out;
  if (length < 0) return out;
  if (length == 0) {
    if (to == from) out[0] = 1;
    return out;
  }
  for (MorId p : cat.hom(from, to)) {
    if (cat.length(p) != length || cat.is_identity(p)) continue;
    const auto gens = bar_generators(cat, p);
    const std::size_t top = gens.size() - 1;
    // rank_to[r]: rank of the differential between rank r and rank r-1 generators
    std::vector<std::size_t> rank_to(top + 2, 0);
    for (std::size_t r = 2; r <= top; ++r) {
      SparseMatrix d(gens[r].size(), gens[r - 1].size());
      for (std::uint32_t row = 0; row < gens[r].size(); ++row) {
        const auto& t = gens[r][row];
        for (std::size_t i = 1; i < r; ++i) {
          std::vector<MorId> face(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
          face.push_back(*cat.compose(t[i], t[i - 1]));
          face.insert(face.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
          auto it = std::lower_bound(gens[r - 1].begin(), gens[r - 1].end(), face);
          d.add(row, static_cast<std::uint32_t>(it - gens[r - 1].begin()), i % 2 == 0 ? 1 : -1);
        }
      }
      rank_to[r] = rank(d, field);
    }
    for (std::size_t r = 1; r <= top; ++r) {
      auto dim = gens[r].size() - rank_to[r] - rank_to[r + 1];
      if (dim != 0) out[static_cast<int>(r)] += dim;
    }
  }
  return out;
}

ExtTable ext_table(const FiniteGradedCategory& cat, const Field& field) {
  ExtTable table;
  for (std::uint32_t o = 0; o < cat.num_objects(); ++o) table[{ObjId{o}, ObjId{o}, 0, 0}] = 1;
  FactorizationEngine engine(cat);
  for (MorId p : graded_order(cat)) {
    ExtDims dims;
    add_profile(dims, reduced_cohomology(engine.space(p).complex, field));
    for (const auto& [degree, value] : dims) table[{cat.target(p), cat.source(p), cat.length(p), degree}] += value;
  }
  return table;
}

ExtTable ext_table_oracle(const FiniteGradedCategory& cat, const Field& field) {
  ExtTable table;
  const auto k = static_cast<std::uint32_t>(cat.num_objects());
  for (std::uint32_t w = 0; w < k; ++w)
    for (std::uint32_t v = 0; v < k; ++v) {
      std::vector<int> lengths;
      for (MorId p : cat.hom(ObjId{v}, ObjId{w})) lengths.push_back(cat.length(p));
      std::sort(lengths.begin(), lengths.end());
      lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
      for (int n : lengths)
        for (const auto& [degree, value] : ext_oracle_resolution(cat, ObjId{w}, ObjId{v}, n, field))
          table[{ObjId{w}, ObjId{v}, n, degree}] += value;
    }
  return table;
}

ExtTable transpose(const ExtTable& table) {
  ExtTable out;
  for (const auto& [key, value] : table) out[{key.from, key.to, key.length, key.degree}] = value;
  return out;
}

KoszulVerdict is_koszul(const FiniteGradedCategory& cat, const Field& field, const KoszulOptions& options) {
  KoszulVerdict verdict;
  verdict.checked_up_to = cat.truncation();
  if (options.max_length && *options.max_length < cat.max_length())
    verdict.checked_up_to = std::min(verdict.checked_up_to.value_or(*options.max_length), *options.max_length);
  FactorizationEngine engine(cat);
  for (MorId p : graded_order(cat)) {
    if (options.max_length && cat.length(p) > *options.max_length) break;
    ++verdict.examined_morphisms;
    auto profile = reduced_cohomology(engine.space(p).complex, field);
    const int expected = cat.length(p) - 2;
    bool ok = std::all_of(profile.reduced_betti.begin(), profile.reduced_betti.end(),
                          [&](const auto& kv) { return kv.second == 0 || kv.first == expected; });
    if (ok) continue;
    verdict.koszul = false;
    ++verdict.failing_morphisms;
    if (verdict.witnesses.size() < options.witness_limit) verdict.witnesses.push_back({p, std::move(profile)});
  }
  return verdict;
}

GenerationReport generated_in_degree_one(const FiniteGradedCategory& cat) {
  GenerationReport report;
  for (MorId p : graded_order(cat)) {
    if (cat.length(p) >= 2 && cat.decompositions(p).empty()) {
      report.generated = false;
      report.witnesses.push_back(p);
    }
  }
  return report;
}

bool quadratic_sufficient(const FiniteGradedCategory& cat, const Field& field) {
  FactorizationEngine engine(cat);
  for (MorId p : graded_order(cat)) {
    const int len = cat.length(p);
    if (len == 1) continue;
    auto space = engine.space(p);
    if (space.complex.empty()) return false;
    if (len != 2 && reduced_cohomology(space.complex, field).at(0) != 0) return false;
  }
  return true;
}

std::string_view to_string(Quadraticity q) {
  switch (q) {
    case Quadraticity::Quadratic: return "quadratic";
    case Quadraticity::NotQuadratic: return "not_quadratic";
    case Quadraticity::Unknown: return "unknown";
  }
  return "unknown";
}

QuadraticReport quadratic_status(const FiniteGradedCategory& cat, const Field& field, std::size_t witness_limit) {
  QuadraticReport report;
  report.checked_up_to = cat.truncation();
  report.generation = generated_in_degree_one(cat);
  if (report.generation.witnesses.size() > witness_limit) report.generation.witnesses.resize(witness_limit);
  FactorizationEngine engine(cat);
  for (MorId p : graded_order(cat)) {
    if (cat.length(p) < 3) continue;
    auto space = engine.space(p);
    if (!space.complex.empty() && reduced_cohomology(space.complex, field).at(0) != 0 &&
        report.higher_relations.size() < witness_limit)
      report.higher_relations.push_back(p);
  }
  report.sufficient_condition = report.generation.generated && report.higher_relations.empty();
  if (!report.sufficient_condition)
    report.status = Quadraticity::NotQuadratic;
  else if (cat.truncation())
    report.status = Quadraticity::Unknown;
  return report;
}

}  // namespace koszul
