#include <doctest.h>

#include "generators.hpp"
#include "koszul/errors.hpp"
#include "koszul/fixtures.hpp"
#include "koszul/koszul.hpp"
#include "koszul/toric.hpp"
#include "oracles.hpp"

using namespace koszul;

namespace {

const Field Q = Field::rationals();

ToricCollectionSpec spec_of(const std::string& name) { return toric_from_json(fixture(name).document); }

ToricCollectionSpec hirzebruch(int n) {
  auto s = spec_of("f1");
  s.variables[1].degree = {-n, 1};
  return s;
}

ToricCollectionSpec projective(int dim) {
  ToricCollectionSpec s;
  s.group.free_rank = 1;
  for (int i = 0; i <= dim; ++i) s.variables.push_back({"x" + std::to_string(i), {1}});
  for (int i = 0; i <= dim; ++i) s.collection.push_back({i});
  return s;
}

std::vector<std::string> words(const ToricCollectionSpec& s, const std::vector<Exponents>& us) {
  std::vector<std::string> out;
  for (const auto& u : us) out.push_back(monomial_word(s, u));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("pointedness") {
  CHECK(is_pointed(spec_of("f1")));
  CHECK(is_pointed(spec_of("p2")));
  ClassGroup z{1, {}};
  CHECK_FALSE(is_pointed(z, {{1}, {-1}}));
  CHECK(is_pointed(z, {{1}, {1}, {1}}));
  CHECK_FALSE(is_pointed(z, {{0}}));
  ClassGroup z2{2, {}};
  CHECK_FALSE(is_pointed(z2, {{1, 0}, {-1, 1}, {0, -1}}));
  CHECK(is_pointed(z2, {{1, 0}, {-1, 1}, {0, 1}}));
  // torsion coordinates never matter
  ClassGroup mixed{1, {2}};
  CHECK(is_pointed(mixed, {{1, 1}, {1, 0}}));
}

TEST_CASE("monomials of a degree") {
  auto p2 = spec_of("p2");
  CHECK(words(p2, monomials_of_degree(p2, {1})) == std::vector<std::string>{"x0", "x1", "x2"});
  CHECK(monomials_of_degree(p2, {0}).size() == 1);
  CHECK(monomial_word(p2, monomials_of_degree(p2, {0})[0]) == "1");
  CHECK(monomials_of_degree(p2, {2}).size() == 6);
  CHECK(monomials_of_degree(p2, {-1}).empty());

  auto f2 = spec_of("f2");
  CHECK(words(f2, monomials_of_degree(f2, {0, 1})) ==
        std::vector<std::string>{"x2∘x1∘x1", "x3∘x2∘x1", "x3∘x3∘x2", "x4"});

  ToricCollectionSpec bad;
  bad.group = {1, {}};
  bad.variables = {{"u", {1}}, {"v", {-1}}};
  bad.collection = {{0}};
  try {
    monomials_of_degree(bad, {0});
    FAIL("expected NotPointed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPointed);
  }
  auto capped = p2;
  capped.max_total_degree = 2;
  try {
    monomials_of_degree(capped, {3});
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("monomial enumeration matches the nested-loop oracle") {
  gen::Rng rng(0x5eed0003);
  std::uniform_int_distribution<int> coord(-2, 3), nvars(1, 4);
  int checked = 0;
  while (checked < 120) {
    ToricCollectionSpec s;
    const bool torsion = checked % 3 == 0;
    s.group = {2, {}};
    if (torsion) s.group.torsion = {3};
    const int n = nvars(rng);
    for (int i = 0; i < n; ++i) {
      GroupElement d{coord(rng), coord(rng)};
      if (torsion) d.push_back(std::uniform_int_distribution<int>(0, 2)(rng));
      s.variables.push_back({"x" + std::to_string(i), d});
    }
    s.collection = {GroupElement(s.group.dimension(), 0)};
    if (!is_pointed(s)) continue;
    s.max_total_degree = 64;
    GroupElement target{coord(rng), coord(rng)};
    if (torsion) target.push_back(std::uniform_int_distribution<int>(0, 2)(rng));
    const int cap = 6;
    auto got = monomials_of_degree_bounded(s, target, cap);
    std::sort(got.begin(), got.end());
    INFO("case " << checked);
    CHECK(got == oracle::monomials(s, target, cap));
    ++checked;
  }
}

TEST_CASE("skew categories") {
  auto p2 = skew_category(spec_of("p2")).category;
  CHECK(validate(p2).ok());
  CHECK(p2.num_objects() == 3);
  CHECK(p2.num_morphisms() == 15);
  CHECK(p2.hom(ObjId{0}, ObjId{2}).size() == 6);
  for (MorId m : p2.hom(ObjId{0}, ObjId{2})) CHECK(p2.length(m) == 2);
  auto beilinson = load_category(fixture("beilinson-p2").document);
  CHECK(is_koszul(p2, Q).koszul == is_koszul(beilinson, Q).koszul);
  CHECK(ext_simples(p2, ObjId{2}, ObjId{0}, 2, Q) == ExtDims{{2, 3}});

  auto sq = skew_category(spec_of("p1xp1")).category;
  CHECK(validate(sq).ok());
  CHECK(sq.num_morphisms() == 16);
  CHECK(sq.hom(ObjId{0}, ObjId{3}).size() == 4);
  auto p1 = load_category(fixture("beilinson-p1").document);
  CHECK(ext_table(sq, Q).size() == ext_table(product(p1, p1), Q).size());

  auto f1 = skew_category(spec_of("f1"));
  CHECK(validate(f1.category).ok());
  const auto& c = f1.category;
  CHECK(c.num_objects() == 4);
  // (0,0) -> (0,1): x4 is an arrow, x1x2 and x2x3 are composites
  auto hom = c.hom(ObjId{0}, ObjId{2});
  CHECK(hom.size() == 3);
  int arrows = 0;
  for (MorId m : hom) arrows += c.length(m) == 1;
  CHECK(arrows == 1);
  CHECK(c.morphism(c.identity(ObjId{1})).label == "id_(1,0)");
}

TEST_CASE("total-degree grading") {
  auto tp2 = skew_category(spec_of("p2"), SkewGrading::TotalDegree).category;
  CHECK(tp2 == skew_category(spec_of("p2")).category);
  // x1x2 : (1,0) -> (0,1) in F2 is indecomposable with two variables
  auto f2 = skew_category(spec_of("f2"), SkewGrading::TotalDegree).category;
  CHECK_FALSE(generated_in_degree_one(f2).generated);
  CHECK(generated_in_degree_one(skew_category(spec_of("f2")).category).generated);
}

TEST_CASE("saturation") {
  for (int k = 1; k <= 3; ++k) {
    auto s = projective(k);
    CHECK(is_saturated(s, s.collection).saturated);
    CHECK(is_koszul(skew_category(s).category, Q).koszul);
  }
  auto f1 = spec_of("f1");
  auto r = is_saturated(f1, f1.collection);
  CHECK_FALSE(r.saturated);
  REQUIRE(r.witness.has_value());
  CHECK(std::get<0>(*r.witness) == GroupElement{0, 0});
  CHECK(std::get<1>(*r.witness) == GroupElement{-1, 1});
  CHECK(std::get<2>(*r.witness) == GroupElement{0, 1});
  CHECK(is_saturated(f1, {{1, 1}}).saturated);
}

TEST_CASE("arrow potentials") {
  auto sq = skew_category(spec_of("p1xp1")).category;
  auto pot = arrow_potential(sq);
  CHECK(pot.exists);
  CHECK(pot.values == std::vector<std::int64_t>{0, 1, 1, 2});

  auto wp = arrow_potential(skew_category(spec_of("wp112")).category);
  CHECK_FALSE(wp.exists);
  CHECK_FALSE(wp.inconsistent_cycle.empty());

  FiniteGradedCategory two({"a", "b"}, {{ObjId{0}, ObjId{0}, 0, "id_a"}, {ObjId{1}, ObjId{1}, 0, "id_b"}},
                           {MorId{0}, MorId{1}}, {});
  auto flat = arrow_potential(two);
  CHECK(flat.exists);
  CHECK(flat.values == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("toric reports") {
  auto sq = toric_report(spec_of("p1xp1"), Q);
  CHECK(sq.koszul);
  CHECK(sq.potential.exists);
  CHECK(sq.strong_after_shift);
  CHECK(sq.conditional);
  CHECK(sq.shifts == std::vector<std::int64_t>{0, -1, -1, -2});

  auto f1 = toric_report(spec_of("f1"), Q);
  CHECK_FALSE(f1.koszul);
  CHECK_FALSE(f1.strong_after_shift);
  REQUIRE(f1.factorization_check.witnesses.size() == 1);
  const MorId w = f1.factorization_check.witnesses[0].morphism;
  CHECK(monomial_word(spec_of("f1"), f1.skew.monomials[w.index]) == "x3∘x2∘x1");
  CHECK(f1.skew.category.length(w) == 3);

  auto wp = toric_report(spec_of("wp112"), Q);
  CHECK(wp.koszul);
  CHECK_FALSE(wp.potential.exists);
  CHECK_FALSE(wp.strong_after_shift);

  auto p2 = toric_report(spec_of("p2"), Q);
  CHECK(p2.koszul);
  REQUIRE(p2.posets.size() == 3);
  CHECK(p2.posets[0].size == 10);
  CHECK(p2.posets[2].size == 1);
}

TEST_CASE("Hirzebruch family") {
  CHECK_FALSE(toric_report(hirzebruch(1), Q).koszul);
  for (int n = 2; n <= 4; ++n) {
    INFO("n = " << n);
    auto r = toric_report(hirzebruch(n), Q);
    CHECK(r.koszul);
    CHECK(r.factorization_check.koszul);
  }
}

TEST_CASE("F2 monomial poset interval is a path") {
  auto s = hirzebruch(2);
  auto skew = skew_category(s);
  const auto& cat = skew.category;
  auto poset = path_poset(cat, ObjId{0});
  // element order follows morphism order out of object 0
  std::vector<MorId> elems;
  for (std::uint32_t m = 0; m < cat.num_morphisms(); ++m)
    if (cat.source(MorId{m}) == ObjId{0}) elems.push_back(MorId{m});
  auto find = [&](const Exponents& u) {
    for (std::uint32_t i = 0; i < elems.size(); ++i)
      if (skew.monomials[elems[i].index] == u) return i;
    FAIL("monomial missing");
    return 0u;
  };
  const auto bottom = find({0, 0, 0, 0}), top = find({2, 1, 1, 0});
  auto complex = order_complex(poset, bottom, top);
  CHECK(complex.num_vertices() == 4);
  CHECK(complex.dimension() == 1);
  CHECK(complex.faces().size() == 7);
  CHECK(reduced_cohomology(complex.to_semisimplicial(), Q).reduced_betti.empty());
  CHECK(is_cohen_macaulay(complex, Q).cohen_macaulay);
}

TEST_CASE("skew projection over a finite group is a discrete fibration") {
  ToricCollectionSpec s;
  s.group = {0, {3}};
  s.variables = {{"x", {1}}, {"y", {2}}};
  s.collection = {{0}};
  auto f = skew_group_projection(s, 3);
  validate_functor(f);
  CHECK(f.domain.num_objects() == 3);
  CHECK(f.codomain.num_objects() == 1);
  CHECK(f.codomain.num_morphisms() == 10);
  CHECK(f.domain.num_morphisms() == 30);
  CHECK(is_discrete_fibration(f).discrete);
  CHECK(is_almost_discrete_fibration(f).almost_discrete);

  auto free = spec_of("p2");
  CHECK_THROWS_AS(skew_group_projection(free, 2), SchemaError);
  auto mono = monomial_category(free, 2);
  CHECK(mono.num_morphisms() == 10);
  CHECK(mono.truncation() == 2);
  CHECK(validate(mono).ok());
}

TEST_CASE("toric collection validation") {
  auto s = spec_of("p2");
  s.collection.push_back({1});
  CHECK_THROWS_AS(validate_spec(s), SchemaError);
  s = spec_of("p2");
  s.variables[0].degree = {1, 0};
  CHECK_THROWS_AS(validate_spec(s), SchemaError);
  s = spec_of("p2");
  s.group.torsion = {1};
  CHECK_THROWS_AS(validate_spec(s), SchemaError);
  CHECK(format_element({3}) == "3");
  CHECK(format_element({1, -2}) == "(1,-2)");
  CHECK(normalize(ClassGroup{1, {4}}, {5, -1}) == GroupElement{5, 3});
}
