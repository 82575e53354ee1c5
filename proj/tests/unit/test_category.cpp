#include <doctest.h>

#include <algorithm>

#include "koszul/category.hpp"
#include "koszul/errors.hpp"
#include "koszul/fixtures.hpp"

using namespace koszul;

namespace {

// a -f-> b -g-> c with gf; identities first
FiniteGradedCategory chain(int composite_length = 2) {
  std::vector<Morphism> ms = {
      {ObjId{0}, ObjId{0}, 0, "id_a"}, {ObjId{1}, ObjId{1}, 0, "id_b"}, {ObjId{2}, ObjId{2}, 0, "id_c"},
      {ObjId{0}, ObjId{1}, 1, "f"},    {ObjId{1}, ObjId{2}, 1, "g"},    {ObjId{0}, ObjId{2}, composite_length, "gf"},
  };
  const CompositionEntry table[] = {{MorId{3}, MorId{4}, MorId{5}}};
  return FiniteGradedCategory({"a", "b", "c"}, ms, {MorId{0}, MorId{1}, MorId{2}}, table);
}

FiniteGradedCategory named(const std::string& name) { return load_category(fixture(name).document); }

std::size_t count_hom(const FiniteGradedCategory& cat, const std::string& from, const std::string& to, int length) {
  auto hom = cat.hom(*cat.find_object(from), *cat.find_object(to));
  return static_cast<std::size_t>(
      std::count_if(hom.begin(), hom.end(), [&](MorId m) { return cat.length(m) == length; }));
}

}  // namespace

TEST_CASE("composition table basics") {
  auto cat = chain();
  CHECK(validate(cat).ok());
  const MorId f{3}, g{4}, gf{5};
  CHECK(cat.compose(f, g) == gf);
  CHECK_FALSE(cat.compose(g, f).has_value());
  CHECK_FALSE(cat.composable(g, f));
  CHECK(cat.compose(cat.identity(ObjId{0}), f) == f);
  CHECK(cat.compose(f, cat.identity(ObjId{1})) == f);
  CHECK(cat.is_identity(MorId{1}));
  CHECK_FALSE(cat.is_identity(f));
  CHECK(cat.max_length() == 2);
  CHECK(cat.find_morphism("g") == g);
  CHECK_FALSE(cat.find_object("z").has_value());
  REQUIRE(cat.decompositions(gf).size() == 1);
  CHECK(cat.decompositions(gf)[0].outer == g);
  CHECK(cat.decompositions(gf)[0].inner == f);
}

TEST_CASE("length additivity violation names both factors") {
  auto report = validate(chain(3));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::LengthNotAdditive);
  CHECK(report.violations[0].witness == std::vector<MorId>{MorId{3}, MorId{4}});
}

TEST_CASE("missing composite and length-zero non-identity are reported") {
  std::vector<Morphism> ms = {{ObjId{0}, ObjId{0}, 0, "id_a"},
                              {ObjId{1}, ObjId{1}, 0, "id_b"},
                              {ObjId{2}, ObjId{2}, 0, "id_c"},
                              {ObjId{0}, ObjId{1}, 1, "f"},
                              {ObjId{1}, ObjId{2}, 0, "g"}};
  FiniteGradedCategory cat({"a", "b", "c"}, ms, {MorId{0}, MorId{1}, MorId{2}}, {});
  auto report = validate(cat);
  auto has = [&](ViolationKind k) {
    return std::any_of(report.violations.begin(), report.violations.end(), [&](auto& v) { return v.kind == k; });
  };
  CHECK(has(ViolationKind::MissingComposite));
  CHECK(has(ViolationKind::NonIdentityOfLengthZero));
}

TEST_CASE("constructor rejects malformed tables") {
  std::vector<Morphism> ms = {{ObjId{0}, ObjId{0}, 0, "id_a"}, {ObjId{1}, ObjId{1}, 0, "id_b"},
                              {ObjId{0}, ObjId{1}, 1, "f"}};
  const CompositionEntry wrong_ends[] = {{MorId{2}, MorId{2}, MorId{2}}};
  CHECK_THROWS_AS(FiniteGradedCategory({"a", "b"}, ms, {MorId{0}, MorId{1}}, wrong_ends), SchemaError);
  const CompositionEntry conflict[] = {{MorId{0}, MorId{2}, MorId{0}}};
  CHECK_THROWS_AS(FiniteGradedCategory({"a", "b"}, ms, {MorId{0}, MorId{1}}, conflict), SchemaError);
  CHECK_THROWS_AS(FiniteGradedCategory({"a", "b"}, ms, {MorId{0}, MorId{7}}, {}), SchemaError);
}

TEST_CASE("quivers with relations") {
  auto p1 = named("beilinson-p1");
  CHECK(p1.num_objects() == 2);
  CHECK(p1.num_morphisms() == 4);
  CHECK(count_hom(p1, "v1", "v2", 1) == 2);
  CHECK(validate(p1).ok());

  auto p2 = named("beilinson-p2");
  CHECK(validate(p2).ok());
  CHECK(count_hom(p2, "v1", "v3", 2) == 6);
  CHECK(p2.num_morphisms() == 15);
  CHECK_FALSE(p2.truncation().has_value());
  // x1 then y0 equals x0 then y1
  CHECK(p2.compose(*p2.find_morphism("x1"), *p2.find_morphism("y0")) ==
        p2.compose(*p2.find_morphism("x0"), *p2.find_morphism("y1")));
  CHECK(p2.morphism(*p2.compose(*p2.find_morphism("x0"), *p2.find_morphism("y0"))).label == "y0∘x0");

  auto hex = named("hexagon-quiver");
  CHECK(count_hom(hex, "a", "f", 3) == 1);
  CHECK(validate(hex).ok());

  auto kx = named("kx-truncated");
  CHECK(kx.num_morphisms() == 7);
  CHECK(kx.truncation() == 6);
  CHECK(validate(kx).ok());
  const MorId x = *kx.find_morphism("x");
  const MorId x6 = *kx.find_morphism("x∘x∘x∘x∘x∘x");
  CHECK_FALSE(kx.compose(x, x6).has_value());
  CHECK(kx.out_of_range(x, x6));
}

TEST_CASE("quiver presentation errors") {
  QuiverPresentation q;
  q.vertices = {"a", "b", "c"};
  q.arrows = {{"f", 0, 1}, {"g", 1, 2}, {"h", 0, 2}, {"k", 0, 2, 2}};
  q.max_length = 3;
  q.relations = {{{0, 1}, {2}}};
  CHECK_THROWS_AS(from_quiver(q), Error);
  try {
    from_quiver(q);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InhomogeneousRelation);
  }
  q.relations = {{{0}, {1}}};
  try {
    from_quiver(q);
    FAIL("expected an endpoint mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RelationEndpointMismatch);
  }
  q.relations = {{{0, 1}, {3}}};
  CHECK(from_quiver(q).num_morphisms() == 3 + 4);

  // f then h equals g then h, f != g: not cancellative
  QuiverPresentation n;
  n.vertices = {"a", "b", "c"};
  n.arrows = {{"f", 0, 1}, {"g", 0, 1}, {"h", 1, 2}};
  n.relations = {{{0, 2}, {1, 2}}};
  n.max_length = 2;
  try {
    from_quiver(n);
    FAIL("expected a cancellativity failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonCancellative);
  }
  n.require_cancellative = false;
  CHECK(from_quiver(n).num_morphisms() == 3 + 3 + 1);
}

TEST_CASE("opposite category") {
  auto a2 = chain();
  auto op = opposite(a2);
  CHECK(validate(op).ok());
  CHECK(op.source(MorId{3}) == ObjId{1});
  CHECK(op.target(MorId{3}) == ObjId{0});
  CHECK(op.compose(MorId{4}, MorId{3}) == MorId{5});
  CHECK(opposite(op) == a2);

  auto p2 = named("beilinson-p2");
  auto p2op = opposite(p2);
  CHECK(count_hom(p2op, "v3", "v1", 2) == 6);
  CHECK(count_hom(p2op, "v1", "v3", 2) == 0);
  CHECK(opposite(p2op) == p2);
}

TEST_CASE("products") {
  auto p1 = named("beilinson-p1");
  auto sq = product(p1, p1);
  CHECK(validate(sq).ok());
  CHECK(sq.num_objects() == 4);
  CHECK(sq.num_morphisms() == 16);
  CHECK(count_hom(sq, "(v1,v1)", "(v2,v1)", 1) == 2);
  CHECK(count_hom(sq, "(v1,v1)", "(v2,v2)", 2) == 4);
  CHECK(sq.find_morphism("(x0,id_v1)").has_value());

  FiniteGradedCategory point({"*"}, {{ObjId{0}, ObjId{0}, 0, "1"}}, {MorId{0}}, {});
  auto same = product(named("beilinson-p2"), point);
  auto p2 = named("beilinson-p2");
  REQUIRE(same.num_morphisms() == p2.num_morphisms());
  for (std::uint32_t f = 0; f < p2.num_morphisms(); ++f)
    for (std::uint32_t g = 0; g < p2.num_morphisms(); ++g)
      CHECK(same.compose(MorId{f}, MorId{g}) == p2.compose(MorId{f}, MorId{g}));

  auto kx = named("kx-truncated");
  CHECK(product(kx, p1).truncation() == 6);
  CHECK(product(kx, kx).num_morphisms() == 49);
}

TEST_CASE("skeletalize collapses isomorphic objects") {
  // a <-> b inverse length-0 isomorphisms
  std::vector<Morphism> ms = {{ObjId{0}, ObjId{0}, 0, "id_a"},
                              {ObjId{1}, ObjId{1}, 0, "id_b"},
                              {ObjId{0}, ObjId{1}, 0, "u"},
                              {ObjId{1}, ObjId{0}, 0, "v"}};
  const CompositionEntry table[] = {{MorId{2}, MorId{3}, MorId{0}}, {MorId{3}, MorId{2}, MorId{1}}};
  FiniteGradedCategory cat({"a", "b"}, ms, {MorId{0}, MorId{1}}, table);
  auto sk = skeletalize(cat);
  CHECK(sk.num_objects() == 1);
  CHECK(sk.num_morphisms() == 1);
  CHECK(skeletalize(chain()) == chain());
}
