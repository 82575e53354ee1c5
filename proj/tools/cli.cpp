#include "cli.hpp"

#include <array>
#include <ostream>
#include <sstream>

#include "koszul/errors.hpp"
#include "koszul/fixtures.hpp"
#include "koszul/koszul.hpp"
#include "koszul/poset.hpp"
#include "koszul/rs.hpp"
#include "koszul/toric.hpp"
#include "koszul/version.hpp"

namespace koszul::cli {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 10> kCommands{{
    {Command::Validate, "validate"},
    {Command::Ext, "ext"},
    {Command::Koszul, "koszul"},
    {Command::Quadratic, "quadratic"},
    {Command::Cm, "cm"},
    {Command::RsVerify, "rs-verify"},
    {Command::RsQuotient, "rs-quotient"},
    {Command::Fibration, "fibration"},
    {Command::Toric, "toric"},
    {Command::EmitFixtures, "emit-fixtures"},
}};

Json bound(std::optional<int> b) { return b ? Json(*b) : Json("complete"); }

Json betti(const BettiProfile& p) {
  Json out = Json::object();
  for (auto [deg, dim] : p.reduced_betti) out[std::to_string(deg)] = dim;
  return out;
}

Json dims(const ExtDims& d) {
  Json out = Json::object();
  for (auto [i, dim] : d) out[std::to_string(i)] = dim;
  return out;
}

Json labels(const FiniteGradedCategory& cat, const std::vector<MorId>& ms) {
  Json out = Json::array();
  for (MorId m : ms) out.push_back(cat.morphism(m).label);
  return out;
}

Json interval(const FinitePoset& p, Interval i) { return Json::array({p.label(i.lo), p.label(i.hi)}); }

ObjId object(const FiniteGradedCategory& cat, const std::string& label, const std::string& flag) {
  auto o = cat.find_object(label);
  if (!o) throw SchemaError(flag, "unknown object '" + label + "'");
  return *o;
}

FiniteGradedCategory checked_category(const Json& doc) {
  auto cat = load_category(doc);
  auto rep = validate(cat);
  if (!rep.ok())
    fail(ErrorKind::Schema, "input is not a category: " + std::string(to_string(rep.violations.front().kind)));
  return cat;
}

std::optional<int> effective_bound(const FiniteGradedCategory& cat, std::optional<int> max_length) {
  std::optional<int> b = cat.truncation();
  if (max_length && *max_length < cat.max_length()) b = std::min(b.value_or(*max_length), *max_length);
  return b;
}

Json validate_report(const RunConfig&, const Json& doc) {
  auto cat = load_category(doc);
  auto rep = validate(cat);
  Json violations = Json::array();
  for (const auto& v : rep.violations)
    violations.push_back({{"kind", std::string(to_string(v.kind))}, {"morphisms", labels(cat, v.witness)}});
  return {{"valid", rep.ok()},
          {"objects", cat.num_objects()},
          {"morphisms", cat.num_morphisms()},
          {"max_length", cat.max_length()},
          {"violations", violations},
          {"checked_up_to", bound(cat.truncation())}};
}

Json ext_report(const RunConfig& c, const Json& doc) {
  auto cat = checked_category(doc);
  Json out;
  out["checked_up_to"] = bound(effective_bound(cat, c.max_length));
  const int top = c.max_length ? std::min(*c.max_length, cat.max_length()) : cat.max_length();
  if (c.ext_from || c.ext_to) {
    if (!c.ext_from || !c.ext_to) throw SchemaError(c.ext_from ? "--to" : "--from", "both --from and --to are required");
    // Ext(S_w, S_v) is built from morphisms v -> w
    const ObjId w = object(cat, *c.ext_from, "--from"), v = object(cat, *c.ext_to, "--to");
    out["from"] = *c.ext_from;
    out["to"] = *c.ext_to;
    if (c.ext_degree) {
      out["degree"] = *c.ext_degree;
      out["ext"] = dims(ext_simples(cat, w, v, *c.ext_degree, c.field));
    } else {
      Json by_degree = Json::object();
      for (int n = 0; n <= top; ++n) {
        auto d = ext_simples(cat, w, v, n, c.field);
        if (!d.empty()) by_degree[std::to_string(n)] = dims(d);
      }
      out["ext"] = by_degree;
    }
    return out;
  }
  Json entries = Json::array();
  for (const auto& [key, dim] : ext_table(cat, c.field)) {
    if (key.length > top) continue;
    entries.push_back({{"from", cat.object_label(key.to)},
                       {"to", cat.object_label(key.from)},
                       {"degree", key.length},
                       {"i", key.degree},
                       {"dim", dim}});
  }
  out["table"] = entries;
  return out;
}

Json koszul_json(const FiniteGradedCategory& cat, const KoszulVerdict& v) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses)
    witnesses.push_back({{"morphism", cat.morphism(w.morphism).label},
                         {"length", cat.length(w.morphism)},
                         {"betti", betti(w.profile)}});
  return {{"koszul", v.koszul},
          {"checked_up_to", bound(v.checked_up_to)},
          {"examined_morphisms", v.examined_morphisms},
          {"failing_morphisms", v.failing_morphisms},
          {"witnesses", witnesses}};
}

Json koszul_report(const RunConfig& c, const Json& doc) {
  auto cat = checked_category(doc);
  return koszul_json(cat, is_koszul(cat, c.field, {c.witness_limit, c.max_length}));
}

Json quadratic_report(const RunConfig& c, const Json& doc) {
  auto cat = checked_category(doc);
  auto q = quadratic_status(cat, c.field, c.witness_limit);
  return {{"status", std::string(to_string(q.status))},
          {"sufficient_condition", q.sufficient_condition},
          {"generated_in_degree_one", q.generation.generated},
          {"indecomposables", labels(cat, q.generation.witnesses)},
          {"higher_relations", labels(cat, q.higher_relations)},
          {"checked_up_to", bound(q.checked_up_to)}};
}

Json cm_report(const RunConfig& c, const Json& doc) {
  auto poset = poset_from_json(doc);
  Json out;
  const bool graded = is_graded(poset);
  auto lcm = is_locally_cohen_macaulay(poset, c.field);
  out["graded"] = graded;
  out["locally_cohen_macaulay"] = lcm.locally_cohen_macaulay;
  out["checked_up_to"] = "complete";
  if (lcm.witness_interval) {
    auto [a, b] = *lcm.witness_interval;
    out["witness_interval"] = {poset.label(a), poset.label(b)};
    out["witness_betti"] = betti(lcm.detail.witness_profile);
  }
  if (graded) out["koszul"] = is_koszul(poset_to_category(poset), c.field).koszul;
  return out;
}

Json axioms_json(const FinitePoset& p, const RsAxiomReport& r) {
  Json a1 = Json::array(), a2 = Json::array(), a4 = Json::array();
  for (const auto& w : r.a1_witnesses)
    a1.push_back({interval(p, w.lower), interval(p, w.upper), interval(p, w.lower_other), interval(p, w.upper_other)});
  for (const auto& w : r.a2_witnesses)
    a2.push_back({{"source", interval(p, w.source)},
                  {"target", interval(p, w.target)},
                  {"element", p.label(w.element)},
                  {"candidates", w.candidates}});
  for (const auto& w : r.a4_witnesses) a4.push_back({interval(p, w.lower), interval(p, w.upper)});
  return {{"ok", r.ok()}, {"a1", r.a1},          {"a2", r.a2},          {"a4", r.a4},
          {"tau_monotone", r.tau_monotone},     {"a1_witnesses", a1}, {"a2_witnesses", a2}, {"a4_witnesses", a4}};
}

Json rs_verify_report(const RunConfig& c, const Json& doc) {
  auto in = rs_input_from_json(doc);
  auto out = axioms_json(in.poset, verify_rs_axioms(in.poset, in.relation, c.witness_limit));
  out["classes"] = in.relation.num_classes();
  out["checked_up_to"] = "complete";
  return out;
}

Json rs_quotient_report(const RunConfig& c, const Json& doc) {
  auto in = rs_input_from_json(doc);
  auto q = rs_quotient(in.poset, in.relation);
  auto alg = reduced_incidence_algebra(in.poset, in.relation);
  Json out;
  out["category"] = category_to_json(q);
  out["objects"] = q.num_objects();
  out["morphisms"] = q.num_morphisms();
  out["reduced_incidence_algebra"] = {{"dimension", alg.dimension},
                                      {"op_isomorphic", alg.op_isomorphic.value_or(false)}};
  out["koszul"] = koszul_json(q, is_koszul(q, c.field, {c.witness_limit, c.max_length}));
  out["checked_up_to"] = "complete";
  return out;
}

Json fibration_report(const RunConfig& c, const Json& doc) {
  auto in = fibration_from_json(doc);
  const Functor& f = in.functor;
  validate_functor(f);
  auto ad = is_almost_discrete_fibration(f);
  auto d = is_discrete_fibration(f);
  Json out;
  out["almost_discrete"] = ad.almost_discrete;
  out["discrete"] = d.discrete;
  out["checked_up_to"] = bound(f.domain.truncation());
  auto sequence = [&](const FactorSequence& s) { return labels(f.domain, s); };
  if (ad.witness) {
    const auto& w = *ad.witness;
    Json lifts = Json::array();
    for (const auto& l : w.lifts) lifts.push_back(sequence(l));
    out["witness"] = {{"morphism", f.domain.morphism(w.morphism).label},
                      {"factorization", labels(f.codomain, w.factorization)},
                      {"lifts", lifts}};
  }
  if (d.witness) {
    out["discrete_witness"] = {{"object", f.domain.object_label(d.witness->object)},
                               {"morphism", f.codomain.morphism(d.witness->morphism).label},
                               {"lifts", labels(f.domain, d.witness->lifts)}};
  }
  if (in.domain_poset && ad.almost_discrete) {
    auto rel = relation_from_fibration(*in.domain_poset, f);
    out["relation"] = relation_to_json(*in.domain_poset, rel);
    out["relation_axioms"] = axioms_json(*in.domain_poset, verify_rs_axioms(*in.domain_poset, rel, c.witness_limit));
  }
  out["domain_koszul"] = is_koszul(f.domain, c.field).koszul;
  out["codomain_koszul"] = is_koszul(f.codomain, c.field).koszul;
  return out;
}

Json toric_report_json(const RunConfig& c, const Json& doc) {
  auto spec = toric_from_json(doc);
  auto r = toric_report(spec, c.field);
  const auto& cat = r.skew.category;
  Json out;
  out["pointed"] = true;
  out["koszul"] = r.koszul;
  out["objects"] = cat.num_objects();
  out["morphisms"] = cat.num_morphisms();
  Json words = Json::array();
  for (const auto& w : r.factorization_check.witnesses)
    words.push_back(monomial_word(spec, r.skew.monomials[w.morphism.index]));
  if (!words.empty()) out["witness"] = words.front();
  out["witnesses"] = words;
  out["factorization_check"] = koszul_json(cat, r.factorization_check);
  Json posets = Json::array();
  for (const auto& p : r.posets) {
    Json entry = {{"object", format_element(spec.collection[p.object])},
                  {"size", p.size},
                  {"graded", p.graded},
                  {"locally_cohen_macaulay", p.locally_cohen_macaulay}};
    if (p.witness_interval) entry["witness_interval"] = {p.witness_interval->first, p.witness_interval->second};
    posets.push_back(std::move(entry));
  }
  out["monomial_posets"] = posets;
  out["saturated"] = r.saturation.saturated;
  if (r.saturation.witness) {
    const auto& [a, m, b] = *r.saturation.witness;
    out["saturation_witness"] = {format_element(a), format_element(m), format_element(b)};
  }
  out["potential_exists"] = r.potential.exists;
  if (r.potential.exists) {
    out["potential"] = r.potential.values;
    out["shifts"] = r.shifts;
  } else {
    Json cycle = Json::array();
    for (auto [m, forward] : r.potential.inconsistent_cycle)
      cycle.push_back({{"morphism", cat.morphism(m).label}, {"forward", forward}});
    out["inconsistent_cycle"] = cycle;
  }
  out["strong_after_shift"] = r.strong_after_shift;
  // fullness and strong exceptionality of the collection are taken on trust
  out["conditional"] = r.conditional;
  out["checked_up_to"] = bound(r.factorization_check.checked_up_to);
  return out;
}

Json emit_report(const RunConfig& c) {
  Json files = Json::array();
  for (const auto& p : emit_fixtures(c.input_path)) files.push_back(p.filename().string());
  return {{"directory", c.input_path.string()}, {"written", files}, {"checked_up_to", "complete"}};
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (auto [c, n] : kCommands)
    if (n == name) return c;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (auto [cmd, n] : kCommands)
    if (cmd == c) return n;
  return "?";
}

Json report(const RunConfig& c, const Json& doc) {
  if (c.max_length && *c.max_length < 1) throw SchemaError("--max-length", "must be at least 1");
  Json out;
  switch (c.command) {
    case Command::Validate: out = validate_report(c, doc); break;
    case Command::Ext: out = ext_report(c, doc); break;
    case Command::Koszul: out = koszul_report(c, doc); break;
    case Command::Quadratic: out = quadratic_report(c, doc); break;
    case Command::Cm: out = cm_report(c, doc); break;
    case Command::RsVerify: out = rs_verify_report(c, doc); break;
    case Command::RsQuotient: out = rs_quotient_report(c, doc); break;
    case Command::Fibration: out = fibration_report(c, doc); break;
    case Command::Toric: out = toric_report_json(c, doc); break;
    case Command::EmitFixtures: out = emit_report(c); break;
  }
  out["command"] = command_name(c.command);
  out["field"] = c.field.name();
  out["version"] = std::string(kVersion);
  return out;
}

std::string render_table(const Json& report) {
  std::size_t width = 0;
  for (const auto& [key, value] : report.items()) width = std::max(width, key.size());
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    os << key << std::string(width - key.size() + 2, ' ');
    if (value.is_string())
      os << value.get<std::string>();
    else
      os << value.dump();
    os << '\n';
  }
  return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Json doc = config.command == Command::EmitFixtures ? Json() : load_document(config.input_path);
    const Json rep = report(config, doc);
    if (config.output == OutputFormat::Json)
      out << rep.dump(2) << '\n';
    else
      out << render_table(rep);
    return kVerdict;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::InvariantViolation ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace koszul::cli
