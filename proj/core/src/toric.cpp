#include "koszul/toric.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "koszul/errors.hpp"
#include "koszul/fourier_motzkin.hpp"
#include "koszul/poset.hpp"

namespace koszul {

GroupElement normalize(const ClassGroup& group, GroupElement g) {
  if (g.size() != group.dimension()) fail(ErrorKind::InvariantViolation, "group element has the wrong width");
  for (std::size_t j = 0; j < group.torsion.size(); ++j) {
    auto& x = g[group.free_rank + j];
    const auto m = group.torsion[j];
    x = ((x % m) + m) % m;
  }
  return g;
}

GroupElement add(const ClassGroup& group, const GroupElement& a, const GroupElement& b) {
  GroupElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b.at(i);
  return normalize(group, std::move(out));
}

GroupElement subtract(const ClassGroup& group, const GroupElement& a, const GroupElement& b) {
  GroupElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b.at(i);
  return normalize(group, std::move(out));
}

std::string format_element(const GroupElement& g) {
  if (g.size() == 1) return std::to_string(g.front());
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
  return out + ")";
}

void validate_spec(const ToricCollectionSpec& spec) {
  for (auto m : spec.group.torsion)
    if (m < 2) throw SchemaError("torsion", "moduli must be at least 2");
  const auto dim = spec.group.dimension();
  for (const auto& v : spec.variables)
    if (v.degree.size() != dim) throw SchemaError("variables", "degree of '" + v.name + "' has the wrong width");
  std::set<GroupElement> seen;
  for (const auto& d : spec.collection) {
    if (d.size() != dim) throw SchemaError("collection", "entry " + format_element(d) + " has the wrong width");
    if (!seen.insert(normalize(spec.group, d)).second)
      throw SchemaError("collection", "entry " + format_element(d) + " is repeated");
  }
  if (spec.max_total_degree < 0) throw SchemaError("max_total_degree", "must be nonnegative");
}

bool is_pointed(const ClassGroup& group, const std::vector<GroupElement>& degrees) {
  const std::size_t m = degrees.size();
  if (m == 0) return true;
  LinearSystem sys(m);
  for (std::size_t i = 0; i < m; ++i) sys.add_nonnegative(i);
  sys.add_eq(std::vector<mpq_class>(m, 1), 1);
  for (std::size_t c = 0; c < group.free_rank; ++c) {
    std::vector<mpq_class> row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = static_cast<long>(degrees[i].at(c));
    sys.add_eq(std::move(row), 0);
  }
  return !sys.feasible();
}

bool is_pointed(const ToricCollectionSpec& spec) {
  std::vector<GroupElement> degrees;
  for (const auto& v : spec.variables) degrees.push_back(v.degree);
  return is_pointed(spec.group, degrees);
}

GroupElement degree_of(const ToricCollectionSpec& spec, const Exponents& u) {
  GroupElement out(spec.group.dimension(), 0);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += static_cast<std::int64_t>(u[i]) * spec.variables[i].degree[c];
  return normalize(spec.group, std::move(out));
}

std::string monomial_word(const ToricCollectionSpec& spec, const Exponents& u) {
  std::string out;
  for (std::size_t i = u.size(); i-- > 0;)
    for (std::uint32_t e = 0; e < u[i]; ++e) {
      if (!out.empty()) out += "∘";
      out += spec.variables[i].name;
    }
  return out.empty() ? "1" : out;
}

std::vector<Exponents> monomials_of_degree(const ToricCollectionSpec& spec, const GroupElement& d) {
  if (!is_pointed(spec)) fail(ErrorKind::NotPointed, "variable degrees are not pointed; fibers may be infinite");
  const std::size_t m = spec.variables.size();
  const std::size_t r = spec.group.free_rank;
  const GroupElement target = normalize(spec.group, d);
  std::vector<Exponents> out;
  Exponents u(m, 0);

  std::function<void(std::size_t, std::vector<std::int64_t>, long)> search =
      [&](std::size_t k, std::vector<std::int64_t> remaining, long total) {
        if (k == m) {
          if (std::any_of(remaining.begin(), remaining.end(), [](auto x) { return x != 0; })) return;
          if (degree_of(spec, u) != target) return;
          if (total > spec.max_total_degree)
            fail(ErrorKind::CapExceeded, "monomial of total degree " + std::to_string(total) + " exceeds max_total_degree");
          out.push_back(u);
          return;
        }
        // rational range of u_k given the free equations on the remaining variables
        const std::size_t vars = m - k;
        LinearSystem sys(vars);
        for (std::size_t i = 0; i < vars; ++i) sys.add_nonnegative(i);
        for (std::size_t c = 0; c < r; ++c) {
          std::vector<mpq_class> row(vars);
          for (std::size_t i = 0; i < vars; ++i) row[i] = static_cast<long>(spec.variables[k + i].degree[c]);
          sys.add_eq(std::move(row), static_cast<long>(remaining[c]));
        }
        auto b = sys.bounds(0);
        if (!b.feasible) return;
        if (!b.upper) fail(ErrorKind::InvariantViolation, "unbounded exponent in a pointed fiber");
        mpz_class lo = 0, hi;
        if (b.lower) {
          mpz_class ceil_lo;
          mpz_cdiv_q(ceil_lo.get_mpz_t(), b.lower->get_num_mpz_t(), b.lower->get_den_mpz_t());
          lo = std::max(lo, ceil_lo);
        }
        mpz_fdiv_q(hi.get_mpz_t(), b.upper->get_num_mpz_t(), b.upper->get_den_mpz_t());
        for (mpz_class t = lo; t <= hi; ++t) {
          const long step = t.get_si();
          if (total + step > spec.max_total_degree)
            fail(ErrorKind::CapExceeded, "search passed max_total_degree " + std::to_string(spec.max_total_degree));
          u[k] = static_cast<std::uint32_t>(step);
          auto next = remaining;
          for (std::size_t c = 0; c < r; ++c) next[c] -= step * spec.variables[k].degree[c];
          search(k + 1, std::move(next), total + step);
        }
        u[k] = 0;
      };
  search(0, std::vector<std::int64_t>(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(r)), 0);
  return out;
}

std::vector<Exponents> monomials_of_degree_bounded(const ToricCollectionSpec& spec, const GroupElement& d,
                                                   int max_total) {
  const std::size_t m = spec.variables.size();
  const GroupElement target = normalize(spec.group, d);
  std::vector<Exponents> out;
  Exponents u(m, 0);
  std::function<void(std::size_t, int)> search = [&](std::size_t k, int budget) {
    if (k == m) {
      if (degree_of(spec, u) == target) out.push_back(u);
      return;
    }
    for (int t = 0; t <= budget; ++t) {
      u[k] = static_cast<std::uint32_t>(t);
      search(k + 1, budget - t);
    }
    u[k] = 0;
  };
  search(0, max_total);
  return out;
}

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::uint32_t total_degree(const Exponents& u) { return std::accumulate(u.begin(), u.end(), 0u); }

struct RawMorphism {
  std::uint32_t source;
  std::uint32_t target;
  Exponents monomial;
};

// Lengths from indecomposable factor counts, checked additive on every composite.
std::vector<int> arrow_count_lengths(const std::vector<RawMorphism>& raw, const std::vector<CompositionEntry>& entries,
                                     const std::vector<bool>& is_identity) {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> decomps(raw.size());
  for (const auto& e : entries)
    if (!is_identity[e.first.index] && !is_identity[e.second.index])
      decomps[e.result.index].emplace_back(e.first.index, e.second.index);
  std::vector<std::uint32_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return total_degree(raw[a].monomial) < total_degree(raw[b].monomial);
  });
  std::vector<int> length(raw.size(), 0);
  for (auto m : order) {
    if (is_identity[m]) continue;
    if (decomps[m].empty()) {
      length[m] = 1;
      continue;
    }
    length[m] = length[decomps[m].front().first] + length[decomps[m].front().second];
    for (auto [a, b] : decomps[m])
      if (length[a] + length[b] != length[m])
        fail(ErrorKind::NotGraded, "factor counts of a morphism disagree; no additive arrow grading");
  }
  return length;
}

FiniteGradedCategory assemble(std::vector<std::string> objects, const std::vector<RawMorphism>& raw,
                              std::vector<std::string> labels, const std::vector<MorId>& identities,
                              const std::vector<CompositionEntry>& entries, SkewGrading grading,
                              std::optional<int> truncation) {
  std::vector<bool> is_identity(raw.size(), false);
  for (auto id : identities) is_identity[id.index] = true;
  std::vector<int> length(raw.size());
  if (grading == SkewGrading::ArrowCount)
    length = arrow_count_lengths(raw, entries, is_identity);
  else
    for (std::size_t i = 0; i < raw.size(); ++i) length[i] = static_cast<int>(total_degree(raw[i].monomial));
  std::vector<Morphism> morphisms;
  for (std::size_t i = 0; i < raw.size(); ++i)
    morphisms.push_back({ObjId{raw[i].source}, ObjId{raw[i].target}, length[i], std::move(labels[i])});
  return FiniteGradedCategory(std::move(objects), std::move(morphisms), identities, entries, truncation);
}

}  // namespace

SkewCategory skew_category(const ToricCollectionSpec& spec, SkewGrading grading) {
  validate_spec(spec);
  if (!is_pointed(spec)) fail(ErrorKind::NotPointed, "variable degrees are not pointed");
  const auto n = static_cast<std::uint32_t>(spec.collection.size());
  std::vector<std::string> objects;
  for (const auto& d : spec.collection) objects.push_back(format_element(d));

  std::vector<RawMorphism> raw;
  std::vector<std::string> labels;
  std::vector<MorId> identities(n);
  std::map<std::tuple<std::uint32_t, std::uint32_t, Exponents>, std::uint32_t> index;
  std::vector<std::vector<std::vector<std::uint32_t>>> hom(n, std::vector<std::vector<std::uint32_t>>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      for (auto& u : monomials_of_degree(spec, subtract(spec.group, spec.collection[j], spec.collection[i]))) {
        const auto id = static_cast<std::uint32_t>(raw.size());
        if (i == j && total_degree(u) == 0) {
          identities[i] = MorId{id};
          labels.push_back("id_" + objects[i]);
        } else {
          labels.push_back(monomial_word(spec, u) + " : " + objects[i] + "→" + objects[j]);
        }
        index.emplace(std::tuple{i, j, u}, id);
        hom[i][j].push_back(id);
        raw.push_back({i, j, std::move(u)});
      }
    }
  }

  std::vector<CompositionEntry> entries;
  for (std::uint32_t f = 0; f < raw.size(); ++f) {
    const auto [i, j, u] = std::tuple{raw[f].source, raw[f].target, raw[f].monomial};
    for (std::uint32_t k = 0; k < n; ++k) {
      for (auto g : hom[j][k]) {
        auto it = index.find({i, k, add_exponents(u, raw[g].monomial)});
        if (it == index.end()) fail(ErrorKind::InvariantViolation, "monomial enumeration is incomplete");
        entries.push_back({MorId{f}, MorId{g}, MorId{it->second}});
      }
    }
  }

  SkewCategory out;
  out.category = assemble(std::move(objects), raw, std::move(labels), identities, entries, grading, std::nullopt);
  for (auto& r : raw) out.monomials.push_back(std::move(r.monomial));
  return out;
}

SaturationReport is_saturated(const ToricCollectionSpec& spec, const std::vector<GroupElement>& subset) {
  if (!is_pointed(spec)) fail(ErrorKind::NotPointed, "variable degrees are not pointed");
  SaturationReport report;
  std::vector<GroupElement> elems;
  for (const auto& s : subset) elems.push_back(normalize(spec.group, s));
  std::set<GroupElement> members(elems.begin(), elems.end());
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      if (a == b) continue;
      for (const auto& u : monomials_of_degree(spec, subtract(spec.group, b, a))) {
        // every proper nonzero divisor v of u gives a + deg(v) between a and b
        Exponents v(u.size(), 0);
        std::function<bool(std::size_t)> visit = [&](std::size_t k) -> bool {
          if (k == u.size()) {
            const auto t = total_degree(v);
            if (t == 0 || t == total_degree(u)) return true;
            auto c = add(spec.group, a, degree_of(spec, v));
            if (members.contains(c)) return true;
            report.saturated = false;
            report.witness = std::tuple{a, c, b};
            return false;
          }
          for (std::uint32_t e = 0; e <= u[k]; ++e) {
            v[k] = e;
            if (!visit(k + 1)) return false;
          }
          v[k] = 0;
          return true;
        };
        if (!visit(0)) return report;
      }
    }
  }
  return report;
}

Potential arrow_potential(const FiniteGradedCategory& cat) {
  const auto n = cat.num_objects();
  Potential out;
  std::vector<std::optional<std::int64_t>> f(n);
  // parent[v] = arrow used to reach v and whether it was traversed forward
  std::vector<std::optional<std::pair<MorId, bool>>> parent(n);
  std::vector<std::vector<std::pair<MorId, bool>>> incident(n);
  for (std::uint32_t m = 0; m < cat.num_morphisms(); ++m) {
    if (cat.length(MorId{m}) != 1) continue;
    incident[cat.source(MorId{m}).index].push_back({MorId{m}, true});
    incident[cat.target(MorId{m}).index].push_back({MorId{m}, false});
  }
  auto walk_to_root = [&](std::uint32_t v) {
    std::vector<std::pair<MorId, bool>> path;
    while (parent[v]) {
      auto [m, forward] = *parent[v];
      path.push_back({m, !forward});
      v = forward ? cat.source(m).index : cat.target(m).index;
    }
    return path;
  };
  for (std::uint32_t root = 0; root < n; ++root) {
    if (f[root]) continue;
    std::vector<std::uint32_t> component{root};
    f[root] = 0;
    std::deque<std::uint32_t> queue{root};
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto [m, forward] : incident[v]) {
        const auto w = forward ? cat.target(m).index : cat.source(m).index;
        const std::int64_t expected = *f[v] + (forward ? 1 : -1);
        if (!f[w]) {
          f[w] = expected;
          parent[w] = std::pair{m, forward};
          component.push_back(w);
          queue.push_back(w);
        } else if (*f[w] != expected && out.exists) {
          out.exists = false;
          // root -> v, the offending arrow, w -> root
          auto to_v = walk_to_root(v);
          std::reverse(to_v.begin(), to_v.end());
          for (auto& step : to_v) step.second = !step.second;
          out.inconsistent_cycle = to_v;
          out.inconsistent_cycle.push_back({m, forward});
          for (auto step : walk_to_root(w)) out.inconsistent_cycle.push_back(step);
        }
      }
    }
    std::int64_t lowest = *f[root];
    for (auto v : component) lowest = std::min(lowest, *f[v]);
    for (auto v : component) *f[v] -= lowest;
  }
  if (out.exists)
    for (const auto& x : f) out.values.push_back(*x);
  return out;
}

ToricReport toric_report(const ToricCollectionSpec& spec, const Field& field) {
  validate_spec(spec);
  if (!is_pointed(spec)) fail(ErrorKind::NotPointed, "variable degrees are not pointed");
  ToricReport report;
  report.skew = skew_category(spec);
  const auto& cat = report.skew.category;
  for (std::uint32_t i = 0; i < cat.num_objects(); ++i) {
    const auto poset = path_poset(cat, ObjId{i});
    MonomialPosetReport pr;
    pr.object = i;
    pr.size = poset.size();
    pr.graded = is_graded(poset);
    const auto lcm = is_locally_cohen_macaulay(poset, field);
    pr.locally_cohen_macaulay = lcm.locally_cohen_macaulay;
    if (lcm.witness_interval)
      pr.witness_interval = std::pair{poset.label(lcm.witness_interval->first), poset.label(lcm.witness_interval->second)};
    report.koszul = report.koszul && pr.locally_cohen_macaulay;
    report.posets.push_back(std::move(pr));
  }
  report.factorization_check = is_koszul(cat, field);
  report.saturation = is_saturated(spec, spec.collection);
  report.potential = arrow_potential(cat);
  report.strong_after_shift = report.koszul && report.potential.exists;
  if (report.potential.exists)
    for (auto v : report.potential.values) report.shifts.push_back(-v);
  return report;
}

namespace {

std::vector<Exponents> monomials_up_to(std::size_t vars, int max_total) {
  std::vector<Exponents> out;
  Exponents u(vars, 0);
  std::function<void(std::size_t, int)> search = [&](std::size_t k, int budget) {
    if (k == vars) {
      out.push_back(u);
      return;
    }
    for (int t = 0; t <= budget; ++t) {
      u[k] = static_cast<std::uint32_t>(t);
      search(k + 1, budget - t);
    }
    u[k] = 0;
  };
  search(0, max_total);
  std::stable_sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
    return total_degree(a) < total_degree(b);
  });
  return out;
}

}  // namespace

FiniteGradedCategory monomial_category(const ToricCollectionSpec& spec, int max_total) {
  const auto monos = monomials_up_to(spec.variables.size(), max_total);
  std::map<Exponents, std::uint32_t> index;
  std::vector<RawMorphism> raw;
  std::vector<std::string> labels;
  for (const auto& u : monos) {
    index.emplace(u, static_cast<std::uint32_t>(raw.size()));
    raw.push_back({0, 0, u});
    labels.push_back(monomial_word(spec, u));
  }
  std::vector<CompositionEntry> entries;
  for (std::uint32_t a = 0; a < raw.size(); ++a)
    for (std::uint32_t b = 0; b < raw.size(); ++b)
      if (auto it = index.find(add_exponents(raw[a].monomial, raw[b].monomial)); it != index.end())
        entries.push_back({MorId{a}, MorId{b}, MorId{it->second}});
  return assemble({"*"}, raw, std::move(labels), {MorId{0}}, entries, SkewGrading::TotalDegree, max_total);
}

Functor skew_group_projection(const ToricCollectionSpec& spec, int max_total) {
  validate_spec(spec);
  if (spec.group.free_rank != 0) throw SchemaError("free_rank", "the skew group category needs a finite group");
  std::vector<GroupElement> elements{{}};
  for (auto m : spec.group.torsion) {
    std::vector<GroupElement> next;
    for (const auto& g : elements)
      for (std::int64_t x = 0; x < m; ++x) {
        auto h = g;
        h.push_back(x);
        next.push_back(std::move(h));
      }
    elements = std::move(next);
  }
  std::map<GroupElement, std::uint32_t> object_of;
  std::vector<std::string> objects;
  for (const auto& g : elements) {
    object_of.emplace(g, static_cast<std::uint32_t>(objects.size()));
    objects.push_back(format_element(g));
  }

  const auto monos = monomials_up_to(spec.variables.size(), max_total);
  std::map<Exponents, std::uint32_t> mono_index;
  for (std::uint32_t i = 0; i < monos.size(); ++i) mono_index.emplace(monos[i], i);

  // morphism (g, u): g -> g + deg(u), numbered g-major
  std::vector<RawMorphism> raw;
  std::vector<std::string> labels;
  std::vector<MorId> identities;
  std::vector<MorId> morphism_map;
  for (std::uint32_t g = 0; g < elements.size(); ++g) {
    for (std::uint32_t i = 0; i < monos.size(); ++i) {
      if (i == 0) identities.push_back(MorId{static_cast<std::uint32_t>(raw.size())});
      const auto tgt = object_of.at(add(spec.group, elements[g], degree_of(spec, monos[i])));
      raw.push_back({g, tgt, monos[i]});
      labels.push_back(monomial_word(spec, monos[i]) + " : " + objects[g] + "→" + objects[tgt]);
      morphism_map.push_back(MorId{i});
    }
  }
  const auto per_object = static_cast<std::uint32_t>(monos.size());
  std::vector<CompositionEntry> entries;
  for (std::uint32_t f = 0; f < raw.size(); ++f)
    for (std::uint32_t i = 0; i < per_object; ++i) {
      const std::uint32_t g = raw[f].target * per_object + i;
      if (auto it = mono_index.find(add_exponents(raw[f].monomial, monos[i])); it != mono_index.end())
        entries.push_back({MorId{f}, MorId{g}, MorId{raw[f].source * per_object + it->second}});
    }

  Functor out;
  out.domain = assemble(objects, raw, std::move(labels), identities, entries, SkewGrading::TotalDegree, max_total);
  out.codomain = monomial_category(spec, max_total);
  out.object_map.assign(elements.size(), ObjId{0});
  out.morphism_map = std::move(morphism_map);
  return out;
}

}  // namespace koszul
