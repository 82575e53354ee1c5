// Invariants checked on seed-pinned random inputs.

#include <doctest.h>

#include "generators.hpp"
#include "koszul/errors.hpp"
#include "koszul/factorization.hpp"
#include "koszul/io.hpp"
#include "koszul/koszul.hpp"
#include "koszul/rs.hpp"
#include "oracles.hpp"

using namespace koszul;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

std::vector<FiniteGradedCategory> sample(std::uint64_t seed, std::size_t count, bool cyclic,
                                         bool cancellative = false) {
  gen::Rng rng(seed);
  gen::QuiverShape shape;
  shape.cyclic = cyclic;
  shape.cancellative = cancellative;
  shape.max_length = cyclic ? 3 : 4;
  std::vector<FiniteGradedCategory> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen::random_category(rng, shape, 25));
  return out;
}

std::int64_t alternating(const BettiProfile& p) {
  std::int64_t s = 0;
  for (auto [d, b] : p.reduced_betti) s += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(b);
  return s;
}

}  // namespace

TEST_CASE("random categories satisfy the category axioms") {
  for (bool cyclic : {false, true}) {
    auto cats = sample(cyclic ? 0x11 : 0x12, 60, cyclic);
    for (std::size_t i = 0; i < cats.size(); ++i) {
      INFO("cyclic " << cyclic << " sample " << i);
      CHECK(validate(cats[i]).ok());
      CHECK(opposite(opposite(cats[i])) == cats[i]);
      CHECK(validate(opposite(cats[i])).ok());
    }
  }
}

TEST_CASE("factorization spaces are semi-simplicial and match the exhaustive oracle") {
  for (bool cyclic : {false, true}) {
    auto cats = sample(cyclic ? 0x21 : 0x22, 40, cyclic);
    for (std::size_t i = 0; i < cats.size(); ++i) {
      const auto& cat = cats[i];
      FactorizationEngine engine(cat);
      for (std::uint32_t m = 0; m < cat.num_morphisms(); ++m) {
        const MorId p{m};
        if (cat.is_identity(p)) continue;
        INFO("sample " << i << " morphism " << cat.morphism(p).label);
        auto space = engine.space(p);
        CHECK(check_semisimplicial(space.complex).empty());
        for (std::size_t d = 0; d < space.cells.size(); ++d)
          CHECK(space.cells[d].size() == oracle::factorizations(cat, p, d + 2).size());
        auto profile = reduced_cohomology(space.complex, Q);
        CHECK(profile.reduced_betti == oracle::reduced_betti(cat, p, Q));
        CHECK(reduced_cohomology(space.complex, F2).reduced_betti == oracle::reduced_betti(cat, p, F2));
        // reduced Euler characteristic from cells equals the Betti alternating sum
        CHECK(euler_characteristic(space.complex) - 1 == alternating(profile));
      }
      CHECK(verify_cells_bijection(cat));
      CHECK(check_semisimplicial(reduced_nerve(cat).complex).empty());
    }
  }
}

TEST_CASE("Koszul verdict is concentration of the Ext table") {
  auto cats = sample(0x31, 60, false);
  auto more = sample(0x32, 30, true);
  cats.insert(cats.end(), more.begin(), more.end());
  for (std::size_t i = 0; i < cats.size(); ++i) {
    const auto& cat = cats[i];
    bool diagonal = true;
    for (const auto& [key, dim] : ext_table(cat, Q))
      if (dim && key.degree != key.length) diagonal = false;
    INFO("sample " << i);
    CHECK(is_koszul(cat, Q).koszul == diagonal);
    CHECK(ext_table(cat, Q) == transpose(ext_table(opposite(cat), Q)));
  }
}

TEST_CASE("Koszul implies quadratic") {
  auto cats = sample(0x33, 80, false);
  for (std::size_t i = 0; i < cats.size(); ++i) {
    if (!is_koszul(cats[i], Q).koszul) continue;
    INFO("sample " << i);
    CHECK(quadratic_status(cats[i], Q).status != Quadraticity::NotQuadratic);
  }
}

TEST_CASE("products of Koszul categories are Koszul") {
  gen::Rng rng(0x41);
  gen::QuiverShape shape;
  shape.max_vertices = 3;
  shape.max_arrows = 4;
  shape.max_length = 3;
  int checked = 0;
  while (checked < 25) {
    auto a = gen::random_category(rng, shape, 10), b = gen::random_category(rng, shape, 10);
    if (!is_koszul(a, Q).koszul || !is_koszul(b, Q).koszul) continue;
    auto ab = product(a, b);
    INFO("pair " << checked);
    CHECK(validate(ab).ok());
    CHECK(ab.num_morphisms() == a.num_morphisms() * b.num_morphisms());
    CHECK(is_koszul(ab, Q).koszul);
    ++checked;
  }
}

TEST_CASE("category documents round trip") {
  auto cats = sample(0x51, 40, true);
  for (const auto& cat : cats) {
    auto doc = category_to_json(cat);
    CHECK(category_from_json(parse_json(doc.dump())) == cat);
  }
}

TEST_CASE("graded posets: intervals are factorization spaces") {
  gen::Rng rng(0x61);
  for (int trial = 0; trial < 150; ++trial) {
    auto p = gen::random_graded_poset(rng, 8);
    REQUIRE(is_graded(p));
    for (auto [a, b] : p.comparable_pairs()) {
      if (a == b) continue;
      INFO("trial " << trial << " interval " << p.label(a) << "," << p.label(b));
      CHECK(verify_interval_equals_factorization(p, a, b, Q));
    }
  }
}

TEST_CASE("identity relations pass the axioms and reproduce the poset") {
  gen::Rng rng(0x71);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = gen::random_graded_poset(rng, 7);
    auto id = IntervalRelation::identity(p);
    INFO("trial " << trial);
    CHECK(verify_rs_axioms(p, id).ok());
    auto q = rs_quotient(p, id);
    CHECK(ext_table(q, Q) == ext_table(poset_to_category(p), Q));
    CHECK(reduced_incidence_algebra(p, id).op_isomorphic == true);
  }
}

// Path posets model paths modulo binomial relations only, so samples whose
// truncation cuts off a composite are skipped.
static bool untruncated(const FiniteGradedCategory& cat) {
  for (std::uint32_t f = 0; f < cat.num_morphisms(); ++f)
    for (std::uint32_t g = 0; g < cat.num_morphisms(); ++g)
      if (cat.out_of_range(MorId{f}, MorId{g})) return false;
  return true;
}

TEST_CASE("path poset projections are almost discrete fibrations") {
  auto cats = sample(0x81, 80, false, true);
  std::size_t used = 0;
  for (std::size_t i = 0; i < cats.size(); ++i) {
    const auto& cat = cats[i];
    if (!untruncated(cat)) continue;
    ++used;
    auto proj = path_poset_projection(cat);
    INFO("sample " << i);
    validate_functor(proj.projection);
    CHECK(is_almost_discrete_fibration(proj.projection).almost_discrete);
    auto rel = relation_from_fibration(proj.poset, proj.projection);
    CHECK(rel.num_classes() == cat.num_morphisms());
    CHECK(verify_rs_axioms(proj.poset, rel).ok());
    auto cmp = quotient_comparison(proj.poset, rel, proj.projection);
    CHECK(is_isomorphism(cmp));
    // almost discrete fibrations preserve and reflect Koszulity
    CHECK(is_koszul(proj.projection.domain, Q).koszul == is_koszul(cat, Q).koszul);
  }
  CHECK(used >= 20);
}
