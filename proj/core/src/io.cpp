#include "koszul/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

Json load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (path.extension() == ".toml") return parse_toml(text);
  return parse_json(text);
}

namespace {

std::string at(const std::string& ctx, const std::string& key) { return ctx.empty() ? key : ctx + "." + key; }
std::string at(const std::string& ctx, std::size_t i) { return ctx + "[" + std::to_string(i) + "]"; }

const Json& member(const Json& obj, const std::string& key, const std::string& ctx = "") {
  if (!obj.is_object()) throw SchemaError(ctx.empty() ? "<root>" : ctx, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at(ctx, key), "missing required key");
  return *it;
}

const Json* optional_member(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

std::string string_of(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t int_of(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::vector<std::string> string_list(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    out.push_back(string_of(j[i], at(path, i)));
    if (!seen.insert(out.back()).second) throw SchemaError(at(path, i), "duplicate name '" + out.back() + "'");
  }
  return out;
}

std::uint32_t lookup(const std::map<std::string, std::uint32_t>& names, const Json& j, const std::string& path,
                     const std::string& what) {
  auto name = string_of(j, path);
  auto it = names.find(name);
  if (it == names.end()) throw SchemaError(path, "unknown " + what + " '" + name + "'");
  return it->second;
}

std::map<std::string, std::uint32_t> index_names(const std::vector<std::string>& names) {
  std::map<std::string, std::uint32_t> out;
  for (std::uint32_t i = 0; i < names.size(); ++i) out.emplace(names[i], i);
  return out;
}

}  // namespace

FiniteGradedCategory category_from_json(const Json& doc) {
  const auto objects = string_list(member(doc, "objects"), "objects");
  const auto object_index = index_names(objects);
  std::vector<Morphism> morphisms;
  std::vector<MorId> identities(objects.size());
  const Json* ids = optional_member(doc, "identities");
  if (!ids) {
    for (std::uint32_t o = 0; o < objects.size(); ++o) {
      identities[o] = MorId{o};
      morphisms.push_back({ObjId{o}, ObjId{o}, 0, "id_" + objects[o]});
    }
  }
  const auto& listed = array(member(doc, "morphisms"), "morphisms");
  for (std::size_t i = 0; i < listed.size(); ++i) {
    const auto ctx = at("morphisms", i);
    const auto& m = listed[i];
    Morphism mor;
    mor.label = string_of(member(m, "label", ctx), at(ctx, "label"));
    mor.source = ObjId{lookup(object_index, member(m, "src", ctx), at(ctx, "src"), "object")};
    mor.target = ObjId{lookup(object_index, member(m, "tgt", ctx), at(ctx, "tgt"), "object")};
    const Json* len = optional_member(m, "len");
    mor.length = len ? static_cast<int>(int_of(*len, at(ctx, "len"))) : 1;
    morphisms.push_back(std::move(mor));
  }
  std::map<std::string, std::uint32_t> mor_index;
  for (std::uint32_t i = 0; i < morphisms.size(); ++i)
    if (!mor_index.emplace(morphisms[i].label, i).second)
      throw SchemaError("morphisms", "duplicate label '" + morphisms[i].label + "'");
  if (ids) {
    if (!ids->is_object()) throw SchemaError("identities", "expected an object");
    for (std::uint32_t o = 0; o < objects.size(); ++o) {
      auto it = ids->find(objects[o]);
      if (it == ids->end()) throw SchemaError(at("identities", objects[o]), "missing identity");
      identities[o] = MorId{lookup(mor_index, *it, at("identities", objects[o]), "morphism")};
    }
  }
  std::vector<CompositionEntry> entries;
  if (const Json* compose = optional_member(doc, "compose")) {
    for (std::size_t i = 0; i < array(*compose, "compose").size(); ++i) {
      const auto ctx = at("compose", i);
      const auto& e = (*compose)[i];
      if (!e.is_array() || e.size() != 3) throw SchemaError(ctx, "expected [first, second, result]");
      entries.push_back({MorId{lookup(mor_index, e[0], at(ctx, 0), "morphism")},
                         MorId{lookup(mor_index, e[1], at(ctx, 1), "morphism")},
                         MorId{lookup(mor_index, e[2], at(ctx, 2), "morphism")}});
    }
  }
  std::optional<int> truncation;
  if (const Json* max = optional_member(doc, "max_length")) truncation = static_cast<int>(int_of(*max, "max_length"));
  return FiniteGradedCategory(objects, std::move(morphisms), std::move(identities), entries, truncation);
}

Json category_to_json(const FiniteGradedCategory& cat) {
  Json doc;
  doc["objects"] = cat.object_labels();
  Json morphisms = Json::array();
  for (const auto& m : cat.morphisms())
    morphisms.push_back({{"label", m.label},
                         {"src", cat.object_label(m.source)},
                         {"tgt", cat.object_label(m.target)},
                         {"len", m.length}});
  doc["morphisms"] = std::move(morphisms);
  Json ids = Json::object();
  for (std::uint32_t o = 0; o < cat.num_objects(); ++o)
    ids[cat.object_label(ObjId{o})] = cat.morphism(cat.identity(ObjId{o})).label;
  doc["identities"] = std::move(ids);
  Json compose = Json::array();
  for (const auto& e : cat.composition_entries()) {
    // identity composites are filled in on load
    if ((cat.is_identity(e.first) && e.result == e.second) || (cat.is_identity(e.second) && e.result == e.first))
      continue;
    compose.push_back({cat.morphism(e.first).label, cat.morphism(e.second).label, cat.morphism(e.result).label});
  }
  doc["compose"] = std::move(compose);
  if (cat.truncation()) doc["max_length"] = *cat.truncation();
  return doc;
}

QuiverPresentation quiver_from_json(const Json& doc) {
  QuiverPresentation q;
  q.vertices = string_list(member(doc, "vertices"), "vertices");
  const auto vertex_index = index_names(q.vertices);
  const auto& arrows = array(member(doc, "arrows"), "arrows");
  std::map<std::string, std::uint32_t> arrow_index;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto ctx = at("arrows", i);
    QuiverArrow a;
    a.label = string_of(member(arrows[i], "label", ctx), at(ctx, "label"));
    a.source = lookup(vertex_index, member(arrows[i], "src", ctx), at(ctx, "src"), "vertex");
    a.target = lookup(vertex_index, member(arrows[i], "tgt", ctx), at(ctx, "tgt"), "vertex");
    if (const Json* len = optional_member(arrows[i], "len")) a.length = static_cast<int>(int_of(*len, at(ctx, "len")));
    if (!arrow_index.emplace(a.label, static_cast<std::uint32_t>(q.arrows.size())).second)
      throw SchemaError(at(ctx, "label"), "duplicate arrow '" + a.label + "'");
    q.arrows.push_back(std::move(a));
  }
  if (const Json* rels = optional_member(doc, "relations")) {
    for (std::size_t i = 0; i < array(*rels, "relations").size(); ++i) {
      const auto ctx = at("relations", i);
      const auto& r = (*rels)[i];
      if (!r.is_array() || r.size() != 2) throw SchemaError(ctx, "expected [path, path]");
      QuiverPath sides[2];
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t k = 0; k < array(r[s], at(ctx, s)).size(); ++k)
          sides[s].push_back(lookup(arrow_index, r[s][k], at(at(ctx, s), k), "arrow"));
      q.relations.emplace_back(std::move(sides[0]), std::move(sides[1]));
    }
  }
  q.max_length = static_cast<int>(int_of(member(doc, "max_length"), "max_length"));
  if (const Json* c = optional_member(doc, "cancellative")) {
    if (!c->is_boolean()) throw SchemaError("cancellative", "expected a boolean");
    q.require_cancellative = c->get<bool>();
  }
  return q;
}

Json quiver_to_json(const QuiverPresentation& q) {
  Json doc;
  doc["vertices"] = q.vertices;
  Json arrows = Json::array();
  for (const auto& a : q.arrows)
    arrows.push_back({{"label", a.label}, {"src", q.vertices[a.source]}, {"tgt", q.vertices[a.target]}, {"len", a.length}});
  doc["arrows"] = std::move(arrows);
  Json rels = Json::array();
  for (const auto& [lhs, rhs] : q.relations) {
    Json l = Json::array(), r = Json::array();
    for (auto a : lhs) l.push_back(q.arrows[a].label);
    for (auto a : rhs) r.push_back(q.arrows[a].label);
    rels.push_back(Json::array({std::move(l), std::move(r)}));
  }
  doc["relations"] = std::move(rels);
  doc["max_length"] = q.max_length;
  doc["cancellative"] = q.require_cancellative;
  return doc;
}

FinitePoset poset_from_json(const Json& doc) {
  auto elements = string_list(member(doc, "elements"), "elements");
  const auto index = index_names(elements);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> relations;
  if (const Json* rels = optional_member(doc, "relations")) {
    for (std::size_t i = 0; i < array(*rels, "relations").size(); ++i) {
      const auto ctx = at("relations", i);
      const auto& r = (*rels)[i];
      if (!r.is_array() || r.size() != 2) throw SchemaError(ctx, "expected [lower, upper]");
      relations.emplace_back(lookup(index, r[0], at(ctx, 0), "element"), lookup(index, r[1], at(ctx, 1), "element"));
    }
  }
  return FinitePoset(std::move(elements), relations);
}

Json poset_to_json(const FinitePoset& poset) {
  Json doc;
  doc["elements"] = poset.labels();
  Json rels = Json::array();
  for (auto [a, b] : poset.cover_relations()) rels.push_back({poset.label(a), poset.label(b)});
  doc["relations"] = std::move(rels);
  return doc;
}

DocumentKind detect_kind(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("<root>", "expected an object");
  if (doc.contains("vertices")) return DocumentKind::Quiver;
  if (doc.contains("elements")) return DocumentKind::Poset;
  if (doc.contains("objects")) return DocumentKind::Category;
  throw SchemaError("objects", "document is not a category, quiver or poset");
}

FiniteGradedCategory load_category(const Json& doc) {
  switch (detect_kind(doc)) {
    case DocumentKind::Quiver: return from_quiver(quiver_from_json(doc));
    case DocumentKind::Poset: return poset_to_category(poset_from_json(doc));
    case DocumentKind::Category: break;
  }
  return category_from_json(doc);
}

IntervalRelation relation_from_json(const FinitePoset& poset, const Json& classes) {
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < poset.size(); ++i) index.emplace(poset.label(i), i);
  std::vector<std::vector<Interval>> out;
  for (std::size_t i = 0; i < array(classes, "classes").size(); ++i) {
    const auto ctx = at("classes", i);
    std::vector<Interval> cls;
    for (std::size_t k = 0; k < array(classes[i], ctx).size(); ++k) {
      const auto& iv = classes[i][k];
      if (!iv.is_array() || iv.size() != 2) throw SchemaError(at(ctx, k), "expected [lower, upper]");
      cls.push_back({lookup(index, iv[0], at(at(ctx, k), 0), "element"), lookup(index, iv[1], at(at(ctx, k), 1), "element")});
    }
    out.push_back(std::move(cls));
  }
  return IntervalRelation(poset, out);
}

RsInput rs_input_from_json(const Json& doc) {
  auto poset = poset_from_json(member(doc, "poset"));
  const Json* classes = optional_member(doc, "classes");
  auto rel = classes ? relation_from_json(poset, *classes) : IntervalRelation::identity(poset);
  return {std::move(poset), std::move(rel)};
}

Json relation_to_json(const FinitePoset& poset, const IntervalRelation& rel) {
  Json classes = Json::array();
  for (std::uint32_t c = 0; c < rel.num_classes(); ++c) {
    if (rel.members(c).size() < 2) continue;
    Json cls = Json::array();
    for (auto iv : rel.members(c)) cls.push_back({poset.label(iv.lo), poset.label(iv.hi)});
    classes.push_back(std::move(cls));
  }
  return classes;
}

FibrationInput fibration_from_json(const Json& doc) {
  FibrationInput input;
  const auto& dom = member(doc, "domain");
  if (detect_kind(dom) == DocumentKind::Poset) input.domain_poset = poset_from_json(dom);
  Functor& f = input.functor;
  f.domain = input.domain_poset ? poset_to_category(*input.domain_poset) : load_category(dom);
  f.codomain = load_category(member(doc, "codomain"));

  std::map<std::string, std::uint32_t> codomain_objects = index_names(f.codomain.object_labels());
  const auto& omap = member(doc, "object_map");
  if (!omap.is_object()) throw SchemaError("object_map", "expected an object");
  for (std::uint32_t o = 0; o < f.domain.num_objects(); ++o) {
    const auto& label = f.domain.object_label(ObjId{o});
    auto it = omap.find(label);
    if (it == omap.end()) throw SchemaError(at("object_map", label), "missing image");
    f.object_map.push_back(ObjId{lookup(codomain_objects, *it, at("object_map", label), "object")});
  }

  std::map<std::string, std::uint32_t> codomain_morphisms;
  for (std::uint32_t m = 0; m < f.codomain.num_morphisms(); ++m)
    codomain_morphisms.emplace(f.codomain.morphism(MorId{m}).label, m);
  const Json* mmap = optional_member(doc, "morphism_map");
  if (mmap && !mmap->is_object()) throw SchemaError("morphism_map", "expected an object");
  for (std::uint32_t m = 0; m < f.domain.num_morphisms(); ++m) {
    const auto& mor = f.domain.morphism(MorId{m});
    if (mmap && mmap->contains(mor.label)) {
      f.morphism_map.push_back(
          MorId{lookup(codomain_morphisms, mmap->at(mor.label), at("morphism_map", mor.label), "morphism")});
      continue;
    }
    // unlisted: the unique candidate of the right length between the image objects
    const auto src = f.object_map[mor.source.index], tgt = f.object_map[mor.target.index];
    std::vector<MorId> candidates;
    if (f.domain.is_identity(MorId{m})) {
      candidates.push_back(f.codomain.identity(src));
    } else {
      for (MorId c : f.codomain.hom(src, tgt))
        if (f.codomain.length(c) == mor.length && !f.codomain.is_identity(c)) candidates.push_back(c);
    }
    if (candidates.size() != 1)
      throw SchemaError(at("morphism_map", mor.label), "image is not determined by the object map");
    f.morphism_map.push_back(candidates.front());
  }
  return input;
}

ToricCollectionSpec toric_from_json(const Json& doc) {
  ToricCollectionSpec spec;
  const auto rank = int_of(member(doc, "free_rank"), "free_rank");
  if (rank < 0) throw SchemaError("free_rank", "must be nonnegative");
  spec.group.free_rank = static_cast<std::size_t>(rank);
  if (const Json* torsion = optional_member(doc, "torsion"))
    for (std::size_t i = 0; i < array(*torsion, "torsion").size(); ++i)
      spec.group.torsion.push_back(int_of((*torsion)[i], at("torsion", i)));
  auto element = [&](const Json& j, const std::string& path) {
    GroupElement g;
    if (j.is_number_integer()) {
      g.push_back(j.get<std::int64_t>());
    } else {
      for (std::size_t i = 0; i < array(j, path).size(); ++i) g.push_back(int_of(j[i], at(path, i)));
    }
    if (g.size() != spec.group.dimension()) throw SchemaError(path, "expected " + std::to_string(spec.group.dimension()) + " coordinates");
    return g;
  };
  const auto& vars = array(member(doc, "variables"), "variables");
  std::set<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto ctx = at("variables", i);
    ToricVariable v;
    v.name = string_of(member(vars[i], "name", ctx), at(ctx, "name"));
    if (!names.insert(v.name).second) throw SchemaError(at(ctx, "name"), "duplicate variable '" + v.name + "'");
    v.degree = element(member(vars[i], "degree", ctx), at(ctx, "degree"));
    spec.variables.push_back(std::move(v));
  }
  const auto& coll = array(member(doc, "collection"), "collection");
  for (std::size_t i = 0; i < coll.size(); ++i) spec.collection.push_back(element(coll[i], at("collection", i)));
  if (const Json* cap = optional_member(doc, "max_total_degree"))
    spec.max_total_degree = static_cast<int>(int_of(*cap, "max_total_degree"));
  validate_spec(spec);
  return spec;
}

Json toric_to_json(const ToricCollectionSpec& spec) {
  Json doc;
  doc["free_rank"] = spec.group.free_rank;
  doc["torsion"] = spec.group.torsion;
  Json vars = Json::array();
  for (const auto& v : spec.variables) vars.push_back({{"name", v.name}, {"degree", v.degree}});
  doc["variables"] = std::move(vars);
  doc["collection"] = spec.collection;
  doc["max_total_degree"] = spec.max_total_degree;
  return doc;
}

std::string toric_to_toml(const ToricCollectionSpec& spec) {
  auto list = [](const std::vector<std::int64_t>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
    return out + "]";
  };
  std::ostringstream os;
  os << "free_rank = " << spec.group.free_rank << '\n';
  os << "torsion = " << list(spec.group.torsion) << '\n';
  os << "max_total_degree = " << spec.max_total_degree << '\n';
  os << "collection = [";
  for (std::size_t i = 0; i < spec.collection.size(); ++i) os << (i ? ", " : "") << list(spec.collection[i]);
  os << "]\n";
  for (const auto& v : spec.variables) {
    os << "\n[[variables]]\n";
    os << "name = \"" << v.name << "\"\n";
    os << "degree = " << list(v.degree) << '\n';
  }
  return os.str();
}

}  // namespace koszul
