#include <doctest.h>

#include "koszul/errors.hpp"
#include "koszul/factorization.hpp"
#include "koszul/fixtures.hpp"
#include "oracles.hpp"

using namespace koszul;

namespace {

const Field Q = Field::rationals();

FiniteGradedCategory named(const std::string& name) { return load_category(fixture(name).document); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("indecomposables have empty factorization spaces") {
  auto p2 = named("beilinson-p2");
  auto space = factorization_space(p2, *p2.find_morphism("x0"));
  CHECK(space.complex.empty());
  CHECK(reduced_cohomology(space.complex, Q).reduced_betti == std::map<int, std::uint64_t>{{-1, 1}});
  CHECK_THROWS_AS(factorization_space(p2, p2.identity(ObjId{0})), Error);
}

TEST_CASE("off-diagonal Beilinson composite has two vertices") {
  auto p2 = named("beilinson-p2");
  const MorId p = *p2.compose(*p2.find_morphism("x1"), *p2.find_morphism("y0"));
  auto space = factorization_space(p2, p);
  CHECK(space.complex.size(0) == 2);
  CHECK(space.complex.top_dimension() == 0);
  CHECK(reduced_cohomology(space.complex, Q).reduced_betti == std::map<int, std::uint64_t>{{0, 1}});
  // diagonal composite y0 after x0 factors once
  const MorId d = *p2.compose(*p2.find_morphism("x0"), *p2.find_morphism("y0"));
  CHECK(factorization_space(p2, d).complex.size(0) == 1);
}

TEST_CASE("powers of x in the truncated polynomial category") {
  auto kx = named("kx-truncated");
  FactorizationEngine engine(kx);
  for (std::uint32_t m = 0; m < kx.num_morphisms(); ++m) {
    const MorId p{m};
    const int n = kx.length(p);
    if (n < 2) continue;
    auto space = engine.space(p);
    for (int r = 1; r <= n - 1; ++r) {
      // (r+1)-factor factorizations are the (r-1)-cells
      INFO("n=" << n << " r=" << r);
      CHECK(space.complex.size(static_cast<std::size_t>(r - 1)) == binomial(n - 1, r));
    }
    CHECK(space.complex.top_dimension() == n - 2);
    CHECK(reduced_cohomology(space.complex, Q).reduced_betti.empty());
    CHECK(check_semisimplicial(space.complex).empty());
  }
}

TEST_CASE("factorizations agree with exhaustive search") {
  for (const char* name : {"beilinson-p2", "hexagon-quiver", "kx-truncated", "diamond", "a2-chain"}) {
    auto cat = named(name);
    FactorizationEngine engine(cat);
    for (std::uint32_t m = 0; m < cat.num_morphisms(); ++m) {
      const MorId p{m};
      if (cat.is_identity(p)) continue;
      for (std::size_t parts = 2; parts <= static_cast<std::size_t>(cat.length(p)); ++parts) {
        auto got = engine.factorizations(p, parts);
        std::sort(got.begin(), got.end());
        INFO(name << " " << cat.morphism(p).label << " parts " << parts);
        CHECK(got == oracle::factorizations(cat, p, parts));
      }
      CHECK(reduced_cohomology(engine.space(p).complex, Q).reduced_betti == oracle::reduced_betti(cat, p, Q));
    }
  }
}

TEST_CASE("hexagon top morphism has two disjoint edges") {
  auto hex = named("hexagon-quiver");
  auto hom = hex.hom(*hex.find_object("a"), *hex.find_object("f"));
  REQUIRE(hom.size() == 1);
  auto space = factorization_space(hex, hom[0]);
  CHECK(space.complex.size(0) == 4);
  CHECK(space.complex.size(1) == 2);
  auto profile = reduced_cohomology(space.complex, Q);
  CHECK(profile.at(0) == 1);
  CHECK(profile.top_dim == 1);
}

TEST_CASE("reduced nerve of the A2 chain") {
  auto a2 = named("a2-chain");
  auto nerve = reduced_nerve(a2);
  CHECK(nerve.complex.size(0) == 3);
  CHECK(nerve.complex.size(1) == 3);
  CHECK(nerve.complex.size(2) == 1);
  CHECK(nerve.complex.top_dimension() == 2);
  CHECK(check_semisimplicial(nerve.complex).empty());
  // a 2-simplex with all faces is contractible
  CHECK(reduced_cohomology(nerve.complex, Q).reduced_betti.empty());
  CHECK(verify_cells_bijection(a2));
  CHECK(verify_cells_bijection(named("beilinson-p2")));
  CHECK(verify_cells_bijection(named("kx-truncated")));
}

TEST_CASE("identity-only category") {
  FiniteGradedCategory point({"*"}, {{ObjId{0}, ObjId{0}, 0, "1"}}, {MorId{0}}, {});
  auto nerve = reduced_nerve(point);
  CHECK(nerve.complex.size(0) == 1);
  CHECK(nerve.complex.top_dimension() == 0);
  CHECK(verify_cells_bijection(point));
}
