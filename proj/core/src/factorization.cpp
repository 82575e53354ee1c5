#include "koszul/factorization.hpp"

#include <map>

#include "koszul/errors.hpp"

namespace koszul {

const std::vector<FactorSequence>& FactorizationEngine::factorizations(MorId p, std::size_t parts) {
  const std::uint64_t key = (static_cast<std::uint64_t>(p.index) << 32) | parts;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::vector<FactorSequence> out;
  if (parts == 1) {
    if (!cat_.is_identity(p)) out.push_back({p});
  } else if (parts > 1 && static_cast<int>(parts) <= cat_.length(p)) {
    for (const auto& d : cat_.decompositions(p)) {
      // node-based map: the reference survives rehashing in the recursive call
      const auto& tails = factorizations(d.inner, parts - 1);
      for (const auto& tail : tails) {
        FactorSequence seq;
        seq.reserve(parts);
        seq.push_back(d.outer);
        seq.insert(seq.end(), tail.begin(), tail.end());
        out.push_back(std::move(seq));
      }
    }
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

FactorizationSpace FactorizationEngine::space(MorId p) {
  if (cat_.is_identity(p))
    fail(ErrorKind::IdentityMorphism, "factorization space of identity '" + cat_.morphism(p).label + "'");
  if (cat_.length(p) <= 0)
    fail(ErrorKind::NotGraded, "non-identity '" + cat_.morphism(p).label + "' has length 0");
  FactorizationSpace result{p, {}, {}};
  std::map<FactorSequence, std::uint32_t> previous;
  for (std::size_t parts = 2;; ++parts) {
    const auto& seqs = factorizations(p, parts);
    if (seqs.empty()) break;
    const std::size_t dim = parts - 2;
    std::map<FactorSequence, std::uint32_t> current;
    std::vector<std::uint32_t> faces(dim == 0 ? 0 : dim + 1);
    for (const auto& seq : seqs) {
      if (dim > 0) {
        for (std::size_t i = 0; i <= dim; ++i) {
          FactorSequence face;
          face.reserve(parts - 1);
          face.insert(face.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
          auto merged = cat_.compose(seq[i + 1], seq[i]);
          if (!merged) fail(ErrorKind::InvariantViolation, "factorization with missing partial composite");
          face.push_back(*merged);
          face.insert(face.end(), seq.begin() + static_cast<std::ptrdiff_t>(i + 2), seq.end());
          faces[i] = previous.at(face);
        }
      }
      current.emplace(seq, result.complex.add_cell(dim, faces));
    }
    result.cells.push_back(seqs);
    previous = std::move(current);
    if (static_cast<int>(parts) >= cat_.length(p)) break;
  }
  return result;
}

FactorizationSpace factorization_space(const FiniteGradedCategory& cat, MorId p) {
  return FactorizationEngine(cat).space(p);
}

ReducedNerve reduced_nerve(const FiniteGradedCategory& cat) {
  ReducedNerve nerve;
  std::map<FactorSequence, std::uint32_t> previous;
  std::vector<NerveCell> level;
  for (std::uint32_t o = 0; o < cat.num_objects(); ++o) {
    level.push_back({{}, cat.identity(ObjId{o})});
    nerve.complex.add_vertex();
  }
  nerve.cells.push_back(level);

  std::vector<NerveCell> ones;
  for (std::uint32_t m = 0; m < cat.num_morphisms(); ++m) {
    MorId f{m};
    if (cat.is_identity(f)) continue;
    const std::uint32_t faces[2] = {cat.source(f).index, cat.target(f).index};
    previous.emplace(FactorSequence{f}, nerve.complex.add_cell(1, faces));
    ones.push_back({{f}, f});
  }
  if (ones.empty()) return nerve;
  nerve.cells.push_back(ones);

  // every factor has positive length in a graded category, so tuples stop at max_length
  for (std::size_t n = 2; static_cast<int>(n) <= cat.max_length(); ++n) {
    std::vector<NerveCell> next;
    std::map<FactorSequence, std::uint32_t> current;
    std::vector<std::uint32_t> faces(n + 1);
    for (const auto& cell : nerve.cells[n - 1]) {
      for (const auto& one : ones) {
        MorId g = one.composite;
        auto composite = cat.compose(g, cell.composite);
        if (!composite) continue;
        NerveCell extended{cell.factors, *composite};
        extended.factors.push_back(g);
        const auto& fs = extended.factors;
        for (std::size_t i = 0; i <= n; ++i) {
          FactorSequence face;
          if (i == 0) {
            face.assign(fs.begin() + 1, fs.end());
          } else if (i == n) {
            face.assign(fs.begin(), fs.end() - 1);
          } else {
            face.assign(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(i - 1));
            face.push_back(*cat.compose(fs[i], fs[i - 1]));
            face.insert(face.end(), fs.begin() + static_cast<std::ptrdiff_t>(i + 1), fs.end());
          }
          faces[i] = previous.at(face);
        }
        current.emplace(fs, nerve.complex.add_cell(n, faces));
        next.push_back(std::move(extended));
      }
    }
    if (next.empty()) break;
    nerve.cells.push_back(std::move(next));
    previous = std::move(current);
  }
  return nerve;
}

bool verify_cells_bijection(const FiniteGradedCategory& cat) {
  const auto nerve = reduced_nerve(cat);
  FactorizationEngine engine(cat);
  // count nerve k-cells per composite, k >= 2
  std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> nerve_counts;
  for (std::size_t k = 2; k < nerve.cells.size(); ++k)
    for (const auto& c : nerve.cells[k]) ++nerve_counts[{k, c.composite.index}];
  std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> space_counts;
  for (std::uint32_t m = 0; m < cat.num_morphisms(); ++m) {
    MorId p{m};
    if (cat.is_identity(p)) continue;
    const auto space = engine.space(p);
    for (std::size_t d = 0; d < space.cells.size(); ++d)
      if (!space.cells[d].empty()) space_counts[{d + 2, m}] = space.cells[d].size();
  }
  return nerve_counts == space_counts;
}

}  // namespace koszul
