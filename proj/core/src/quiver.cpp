#include <algorithm>
#include <map>
#include <numeric>

#include "koszul/category.hpp"
#include "koszul/errors.hpp"

namespace koszul {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct PathInfo {
  std::uint32_t source;
  std::uint32_t target;
  int length;
};

PathInfo check_path(const QuiverPresentation& q, const QuiverPath& p) {
  if (p.empty()) throw SchemaError("relations", "relation sides must be nonempty paths");
  for (auto a : p)
    if (a >= q.arrows.size()) throw SchemaError("relations", "unknown arrow index " + std::to_string(a));
  PathInfo info{q.arrows[p.front()].source, q.arrows[p.back()].target, 0};
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0 && q.arrows[p[i - 1]].target != q.arrows[p[i]].source)
      throw SchemaError("relations", "arrows '" + q.arrows[p[i - 1]].label + "' and '" + q.arrows[p[i]].label +
                                         "' do not form a path");
    info.length += q.arrows[p[i]].length;
  }
  return info;
}

std::string path_label(const QuiverPresentation& q, const QuiverPath& p) {
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!out.empty()) out += "∘";
    out += q.arrows[*it].label;
  }
  return out;
}

}  // namespace

FiniteGradedCategory from_quiver(const QuiverPresentation& q) {
  const auto k = static_cast<std::uint32_t>(q.vertices.size());
  for (const auto& a : q.arrows) {
    if (a.source >= k || a.target >= k) throw SchemaError("arrows", "arrow '" + a.label + "' has an unknown endpoint");
    if (a.length < 1) throw SchemaError("arrows", "arrow '" + a.label + "' must have positive length");
  }
  if (q.max_length < 0) throw SchemaError("max_length", "must be nonnegative");
  for (const auto& [lhs, rhs] : q.relations) {
    auto l = check_path(q, lhs);
    auto r = check_path(q, rhs);
    if (l.source != r.source || l.target != r.target)
      fail(ErrorKind::RelationEndpointMismatch,
           "relation " + path_label(q, lhs) + " = " + path_label(q, rhs) + " joins paths with different endpoints");
    if (l.length != r.length)
      fail(ErrorKind::InhomogeneousRelation,
           "relation " + path_label(q, lhs) + " = " + path_label(q, rhs) + " is not homogeneous");
  }

  // nontrivial paths of length <= max_length, breadth first
  std::vector<QuiverPath> paths;
  std::vector<PathInfo> info;
  bool dropped = false;
  for (std::uint32_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[a].length > q.max_length) {
      dropped = true;
      continue;
    }
    paths.push_back({a});
    info.push_back({q.arrows[a].source, q.arrows[a].target, q.arrows[a].length});
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::uint32_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].source != info[i].target) continue;
      int len = info[i].length + q.arrows[a].length;
      if (len > q.max_length) {
        dropped = true;
        continue;
      }
      QuiverPath p = paths[i];
      p.push_back(a);
      paths.push_back(std::move(p));
      info.push_back({info[i].source, q.arrows[a].target, len});
    }
  }
  std::map<QuiverPath, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index.emplace(paths[i], i);

  UnionFind classes(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    for (const auto& [lhs, rhs] : q.relations) {
      for (int dir = 0; dir < 2; ++dir) {
        const auto& from = dir == 0 ? lhs : rhs;
        const auto& to = dir == 0 ? rhs : lhs;
        if (from.size() > p.size()) continue;
        for (std::size_t pos = 0; pos + from.size() <= p.size(); ++pos) {
          if (!std::equal(from.begin(), from.end(), p.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
          QuiverPath rewritten(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(pos));
          rewritten.insert(rewritten.end(), to.begin(), to.end());
          rewritten.insert(rewritten.end(), p.begin() + static_cast<std::ptrdiff_t>(pos + from.size()), p.end());
          classes.unite(i, index.at(rewritten));
        }
      }
    }
  }

  // representative = lexicographically least path of the class (all share a length)
  std::map<std::size_t, std::size_t> rep_of_root;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto root = classes.find(i);
    auto [it, inserted] = rep_of_root.emplace(root, i);
    if (!inserted && paths[i] < paths[it->second]) it->second = i;
  }
  std::vector<std::size_t> reps;
  for (const auto& [root, rep] : rep_of_root) reps.push_back(rep);
  std::sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) {
    if (info[a].length != info[b].length) return info[a].length < info[b].length;
    return paths[a] < paths[b];
  });

  std::vector<Morphism> morphisms;
  std::vector<MorId> identities;
  for (std::uint32_t v = 0; v < k; ++v) {
    identities.push_back(MorId{v});
    morphisms.push_back({ObjId{v}, ObjId{v}, 0, "id_" + q.vertices[v]});
  }
  std::vector<std::uint32_t> mor_of_root(paths.size(), 0);
  for (auto r : reps) {
    mor_of_root[classes.find(r)] = static_cast<std::uint32_t>(morphisms.size());
    morphisms.push_back({ObjId{info[r].source}, ObjId{info[r].target}, info[r].length, path_label(q, paths[r])});
  }

  std::vector<CompositionEntry> entries;
  for (auto r1 : reps) {
    for (auto r2 : reps) {
      if (info[r1].target != info[r2].source || info[r1].length + info[r2].length > q.max_length) continue;
      QuiverPath cat_path = paths[r1];
      cat_path.insert(cat_path.end(), paths[r2].begin(), paths[r2].end());
      entries.push_back({MorId{mor_of_root[classes.find(r1)]}, MorId{mor_of_root[classes.find(r2)]},
                         MorId{mor_of_root[classes.find(index.at(cat_path))]}});
    }
  }

  std::optional<int> truncation;
  if (dropped) truncation = q.max_length;
  FiniteGradedCategory cat(q.vertices, std::move(morphisms), std::move(identities), entries, truncation);

  if (q.require_cancellative) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> by_outer, by_inner;
    for (const auto& e : cat.composition_entries()) {
      auto [it1, fresh1] = by_outer.emplace(std::pair{e.second.index, e.result.index}, e.first.index);
      if (!fresh1 && it1->second != e.first.index)
        fail(ErrorKind::NonCancellative, "'" + cat.morphism(e.second).label + "' is not left cancellable: " +
                                             cat.morphism(e.result).label + " has two factorizations");
      auto [it2, fresh2] = by_inner.emplace(std::pair{e.first.index, e.result.index}, e.second.index);
      if (!fresh2 && it2->second != e.second.index)
        fail(ErrorKind::NonCancellative, "'" + cat.morphism(e.first).label + "' is not right cancellable: " +
                                             cat.morphism(e.result).label + " has two factorizations");
    }
  }
  return cat;
}

}  // namespace koszul
