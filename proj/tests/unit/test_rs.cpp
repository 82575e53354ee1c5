#include <doctest.h>

#include "koszul/errors.hpp"
#include "koszul/fixtures.hpp"
#include "koszul/koszul.hpp"
#include "koszul/rs.hpp"

using namespace koszul;

namespace {

const Field Q = Field::rationals();

std::uint32_t at(const FinitePoset& p, const char* label) { return *p.find(label); }

Interval iv(const FinitePoset& p, const char* a, const char* b) { return {at(p, a), at(p, b)}; }

}  // namespace

TEST_CASE("interval relations") {
  auto in = rs_input_from_json(fixture("v-poset-rs").document);
  CHECK(in.relation.num_classes() == 4);
  CHECK(in.relation.equivalent(iv(in.poset, "b", "b"), iv(in.poset, "c", "c")));
  CHECK_FALSE(in.relation.equivalent(iv(in.poset, "a", "b"), iv(in.poset, "a", "c")));
  CHECK(IntervalRelation::identity(in.poset).num_classes() == 5);

  std::vector<std::vector<Interval>> twice = {{iv(in.poset, "a", "b"), iv(in.poset, "a", "c")},
                                              {iv(in.poset, "a", "b"), iv(in.poset, "b", "b")}};
  CHECK_THROWS_AS(IntervalRelation(in.poset, twice), Error);
  std::vector<std::vector<Interval>> not_interval = {{iv(in.poset, "b", "c")}};
  CHECK_THROWS_AS(IntervalRelation(in.poset, not_interval), SchemaError);
}

TEST_CASE("axioms on the bundled relations") {
  for (const char* name : {"v-poset-rs", "hexagon-rs"}) {
    auto in = rs_input_from_json(fixture(name).document);
    auto r = verify_rs_axioms(in.poset, in.relation);
    CHECK(r.ok());
    CHECK(r.tau_monotone);
    CHECK(verify_rs_axioms(in.poset, IntervalRelation::identity(in.poset)).ok());
  }
}

TEST_CASE("axiom failures carry witnesses") {
  // chain a<b<c with [a,b]~[b,c]: no unique comparison map, and composites disagree
  auto in = rs_input_from_json(Json::parse(R"({
    "poset": {"elements": ["a", "b", "c"], "relations": [["a", "b"], ["b", "c"]]},
    "classes": [[["a", "b"], ["b", "c"]]]
  })"));
  auto r = verify_rs_axioms(in.poset, in.relation);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.a2);
  CHECK_FALSE(r.a2_witnesses.empty());
  CHECK_THROWS_AS(rs_quotient(in.poset, in.relation), Error);

  // diamond with [a,b]~[a,c] but the tops kept apart: no comparison map
  auto d = rs_input_from_json(Json::parse(R"({
    "poset": {"elements": ["a", "b", "c", "d"], "relations": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]},
    "classes": [[["a", "b"], ["a", "c"]]]
  })"));
  CHECK_FALSE(verify_rs_axioms(d.poset, d.relation).ok());
}

TEST_CASE("V-poset quotient") {
  auto in = rs_input_from_json(fixture("v-poset-rs").document);
  auto q = rs_quotient(in.poset, in.relation);
  CHECK(validate(q).ok());
  CHECK(q.num_objects() == 2);
  CHECK(q.num_morphisms() == 4);
  auto arrows = q.hom(*q.find_object("[a]"), *q.find_object("[b]"));
  CHECK(arrows.size() == 2);
  auto alg = reduced_incidence_algebra(in.poset, in.relation);
  CHECK(alg.dimension == 4);
  CHECK(alg.op_isomorphic == true);
  const auto point = in.relation.class_of(iv(in.poset, "b", "b"));
  const auto ab = in.relation.class_of(iv(in.poset, "a", "b"));
  const auto ac = in.relation.class_of(iv(in.poset, "a", "c"));
  // xi_[a,b] . xi_[b,b] = xi_[a,b], and the same point class acts on [a,c]
  CHECK(alg.multiply(ab, point) == ab);
  CHECK(alg.multiply(ac, point) == ac);
  CHECK_FALSE(alg.multiply(point, ab).has_value());
}

TEST_CASE("hexagon quotient") {
  auto in = rs_input_from_json(fixture("hexagon-rs").document);
  auto q = rs_quotient(in.poset, in.relation);
  CHECK(validate(q).ok());
  CHECK(q.num_objects() == 5);
  CHECK(q.num_morphisms() == 15);
  // b and c share one object
  CHECK(in.relation.equivalent(iv(in.poset, "b", "b"), iv(in.poset, "c", "c")));
  auto bt = q.find_object("[b]");
  REQUIRE(bt.has_value());
  CHECK_FALSE(q.find_object("[c]").has_value());
  CHECK(q.hom(*bt, *bt).size() == 1);
  CHECK(q.hom(*bt, *q.find_object("[f]")).size() == 2);
  const MorId xt{in.relation.class_of(iv(in.poset, "a", "b"))};
  CHECK(q.length(xt) == 1);
  auto af = q.hom(q.source(xt), *q.find_object("[f]"));
  REQUIRE(af.size() == 1);
  CHECK(q.length(af[0]) == 3);
  auto alg = reduced_incidence_algebra(in.poset, in.relation);
  CHECK(alg.dimension == 15);
  CHECK(alg.op_isomorphic == true);
  CHECK(alg.iso_failures.empty());
  // the quotient inherits non-Koszulity from the poset
  CHECK_FALSE(is_koszul(q, Q).koszul);
}

TEST_CASE("identity relation quotient is the interval category") {
  auto p = poset_from_json(fixture("diamond").document);
  auto q = rs_quotient(p, IntervalRelation::identity(p));
  auto cat = poset_to_category(p);
  REQUIRE(q.num_morphisms() == cat.num_morphisms());
  CHECK(ext_table(q, Q) == ext_table(cat, Q));
  auto alg = reduced_incidence_algebra(p, IntervalRelation::identity(p));
  CHECK(alg.dimension == 9);
  CHECK(alg.op_isomorphic == true);
}

TEST_CASE("almost discrete fibrations") {
  auto chain = fibration_from_json(fixture("diamond-chain").document);
  validate_functor(chain.functor);
  auto v = is_almost_discrete_fibration(chain.functor);
  CHECK_FALSE(v.almost_discrete);
  REQUIRE(v.witness.has_value());
  const auto& dom = chain.functor.domain;
  CHECK(dom.morphism(v.witness->morphism).label == "[a,d]");
  REQUIRE(v.witness->lifts.size() == 2);
  auto labels = [&](const FactorSequence& s) {
    std::vector<std::string> out;
    for (MorId m : s) out.push_back(dom.morphism(m).label);
    return out;
  };
  CHECK(labels(v.witness->lifts[0]) == std::vector<std::string>{"[b,d]", "[a,b]"});
  CHECK(labels(v.witness->lifts[1]) == std::vector<std::string>{"[c,d]", "[a,c]"});
  CHECK_FALSE(is_discrete_fibration(chain.functor).discrete);
  CHECK_THROWS_AS(relation_from_fibration(*chain.domain_poset, chain.functor), Error);

  auto doubled = fibration_from_json(fixture("diamond-doubled").document);
  validate_functor(doubled.functor);
  CHECK(is_almost_discrete_fibration(doubled.functor).almost_discrete);
  auto d = is_discrete_fibration(doubled.functor);
  CHECK_FALSE(d.discrete);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->lifts.size() != 1);

  auto id = identity_functor(chain.functor.codomain);
  CHECK(is_almost_discrete_fibration(id).almost_discrete);
  CHECK(is_discrete_fibration(id).discrete);
  CHECK(is_isomorphism(id));
}

TEST_CASE("functor validation") {
  auto chain = fibration_from_json(fixture("diamond-chain").document);
  Functor broken = chain.functor;
  std::swap(broken.morphism_map[broken.domain.find_morphism("[a,b]")->index],
            broken.morphism_map[broken.domain.find_morphism("[b,d]")->index]);
  CHECK_THROWS_AS(validate_functor(broken), Error);
}

TEST_CASE("relations induced by fibrations") {
  auto twin = fibration_from_json(fixture("twin-diamond").document);
  validate_functor(twin.functor);
  CHECK(is_discrete_fibration(twin.functor).discrete);
  auto rel = relation_from_fibration(*twin.domain_poset, twin.functor);
  CHECK(rel.num_classes() == 9);
  CHECK(verify_rs_axioms(*twin.domain_poset, rel).ok());
  auto cmp = quotient_comparison(*twin.domain_poset, rel, twin.functor);
  validate_functor(cmp);
  CHECK(is_isomorphism(cmp));

  auto doubled = fibration_from_json(fixture("diamond-doubled").document);
  auto drel = relation_from_fibration(*doubled.domain_poset, doubled.functor);
  CHECK(verify_rs_axioms(*doubled.domain_poset, drel).ok());
  CHECK(is_isomorphism(quotient_comparison(*doubled.domain_poset, drel, doubled.functor)));

  auto p = poset_from_json(fixture("diamond").document);
  auto ident = relation_from_fibration(p, identity_functor(poset_to_category(p)));
  CHECK(ident.num_classes() == 9);
}

TEST_CASE("path posets") {
  auto p1 = load_category(fixture("beilinson-p1").document);
  auto pp = path_poset(p1, *p1.find_object("v1"));
  CHECK(pp.size() == 3);
  CHECK(path_poset(p1, *p1.find_object("v2")).size() == 1);
  CHECK_THROWS_AS(path_poset(p1, ObjId{9}), Error);

  auto proj = path_poset_projection(p1);
  validate_functor(proj.projection);
  CHECK(is_almost_discrete_fibration(proj.projection).almost_discrete);
  auto rel = relation_from_fibration(proj.poset, proj.projection);
  CHECK(verify_rs_axioms(proj.poset, rel).ok());
  // [p,q] ~ [p',q'] iff q/p = q'/p': the classes are exactly the morphisms of the category
  CHECK(rel.num_classes() == p1.num_morphisms());
  CHECK(is_isomorphism(quotient_comparison(proj.poset, rel, proj.projection)));

  auto p2 = load_category(fixture("beilinson-p2").document);
  CHECK(path_poset(p2, *p2.find_object("v1")).size() == 10);
  auto proj2 = path_poset_projection(p2);
  auto rel2 = relation_from_fibration(proj2.poset, proj2.projection);
  CHECK(rel2.num_classes() == p2.num_morphisms());
}
