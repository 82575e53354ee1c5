#include "koszul/fixtures.hpp"

#include <fstream>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

Fixture make(std::string name, std::string kind, const char* document, const char* expected) {
  const std::string ext = kind == "toric" ? ".toml" : ".json";
  return {name, name + ext, std::move(kind), Json::parse(document), Json::parse(expected)};
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  out.push_back(make("beilinson-p1", "quiver", R"({
    "vertices": ["v1", "v2"],
    "arrows": [{"label": "x0", "src": "v1", "tgt": "v2"}, {"label": "x1", "src": "v1", "tgt": "v2"}],
    "relations": [],
    "max_length": 2
  })", R"({"koszul": true, "morphisms": 4})"));

  out.push_back(make("beilinson-p2", "quiver", R"({
    "vertices": ["v1", "v2", "v3"],
    "arrows": [
      {"label": "x0", "src": "v1", "tgt": "v2"}, {"label": "x1", "src": "v1", "tgt": "v2"},
      {"label": "x2", "src": "v1", "tgt": "v2"}, {"label": "y0", "src": "v2", "tgt": "v3"},
      {"label": "y1", "src": "v2", "tgt": "v3"}, {"label": "y2", "src": "v2", "tgt": "v3"}
    ],
    "relations": [
      [["x0", "y1"], ["x1", "y0"]], [["x0", "y2"], ["x2", "y0"]], [["x1", "y2"], ["x2", "y1"]]
    ],
    "max_length": 3
  })", R"({"koszul": true, "morphisms": 15, "ext": {"from": "v3", "to": "v1", "degree": 2, "dims": {"2": 3}}})"));

  out.push_back(make("kx-truncated", "quiver", R"({
    "vertices": ["v"],
    "arrows": [{"label": "x", "src": "v", "tgt": "v"}],
    "relations": [],
    "max_length": 6
  })", R"({"koszul": true, "checked_up_to": 6, "morphisms": 7})"));

  out.push_back(make("a2-chain", "quiver", R"({
    "vertices": ["v1", "v2", "v3"],
    "arrows": [{"label": "f", "src": "v1", "tgt": "v2"}, {"label": "g", "src": "v2", "tgt": "v3"}],
    "relations": [],
    "max_length": 3
  })", R"({"koszul": true, "morphisms": 6})"));

  out.push_back(make("hexagon-quiver", "quiver", R"({
    "vertices": ["a", "b", "c", "d", "e", "f"],
    "arrows": [
      {"label": "x", "src": "a", "tgt": "b"}, {"label": "y", "src": "b", "tgt": "d"},
      {"label": "z", "src": "d", "tgt": "f"}, {"label": "u", "src": "a", "tgt": "c"},
      {"label": "v", "src": "c", "tgt": "e"}, {"label": "w", "src": "e", "tgt": "f"}
    ],
    "relations": [[["x", "y", "z"], ["u", "v", "w"]]],
    "max_length": 3
  })", R"({"koszul": false, "quadratic": "not_quadratic", "morphisms": 17})"));

  out.push_back(make("hexagon-poset", "poset", R"({
    "elements": ["a", "b", "c", "d", "e", "f"],
    "relations": [["a", "b"], ["b", "d"], ["d", "f"], ["a", "c"], ["c", "e"], ["e", "f"]]
  })", R"({"koszul": false, "locally_cohen_macaulay": false, "graded": true})"));

  out.push_back(make("diamond", "poset", R"({
    "elements": ["a", "b", "c", "d"],
    "relations": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]
  })", R"({"koszul": true, "locally_cohen_macaulay": true, "graded": true})"));

  out.push_back(make("v-poset-rs", "rs", R"({
    "poset": {"elements": ["a", "b", "c"], "relations": [["a", "b"], ["a", "c"]]},
    "classes": [[["b", "b"], ["c", "c"]]]
  })", R"({"axioms": true, "objects": 2, "morphisms": 4})"));

  out.push_back(make("hexagon-rs", "rs", R"({
    "poset": {
      "elements": ["a", "b", "c", "d", "e", "f"],
      "relations": [["a", "b"], ["b", "d"], ["d", "f"], ["a", "c"], ["c", "e"], ["e", "f"]]
    },
    "classes": [[["a", "b"], ["a", "c"]], [["b", "b"], ["c", "c"]]]
  })", R"({"axioms": true, "objects": 5, "morphisms": 15, "op_isomorphic": true})"));

  out.push_back(make("diamond-chain", "fibration", R"({
    "domain": {
      "elements": ["a", "b", "c", "d"],
      "relations": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]
    },
    "codomain": {
      "vertices": ["0", "1", "2"],
      "arrows": [{"label": "s", "src": "0", "tgt": "1"}, {"label": "t", "src": "1", "tgt": "2"}],
      "max_length": 2
    },
    "object_map": {"a": "0", "b": "1", "c": "1", "d": "2"}
  })", R"({"almost_discrete": false, "discrete": false, "witness": "[a,d]", "lifts": 2})"));

  out.push_back(make("diamond-doubled", "fibration", R"({
    "domain": {
      "elements": ["a", "b", "c", "d"],
      "relations": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]
    },
    "codomain": {
      "vertices": ["a'", "b'", "d'"],
      "arrows": [
        {"label": "f", "src": "a'", "tgt": "b'"}, {"label": "g", "src": "a'", "tgt": "b'"},
        {"label": "h", "src": "b'", "tgt": "d'"}
      ],
      "relations": [[["f", "h"], ["g", "h"]]],
      "max_length": 2,
      "cancellative": false
    },
    "object_map": {"a": "a'", "b": "b'", "c": "b'", "d": "d'"},
    "morphism_map": {"[a,b]": "f", "[a,c]": "g", "[b,d]": "h", "[c,d]": "h"}
  })", R"({"almost_discrete": true, "discrete": false})"));

  out.push_back(make("twin-diamond", "fibration", R"({
    "domain": {
      "elements": ["a", "b", "c", "d", "a2", "b2", "c2", "d2"],
      "relations": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"],
                    ["a2", "b2"], ["a2", "c2"], ["b2", "d2"], ["c2", "d2"]]
    },
    "codomain": {
      "elements": ["a", "b", "c", "d"],
      "relations": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]
    },
    "object_map": {"a": "a", "b": "b", "c": "c", "d": "d", "a2": "a", "b2": "b", "c2": "c", "d2": "d"}
  })", R"({"almost_discrete": true, "discrete": true, "axioms": true})"));

  out.push_back(make("f1", "toric", R"({
    "free_rank": 2, "torsion": [],
    "variables": [{"name": "x1", "degree": [1, 0]}, {"name": "x2", "degree": [-1, 1]},
                  {"name": "x3", "degree": [1, 0]}, {"name": "x4", "degree": [0, 1]}],
    "collection": [[0, 0], [1, 0], [0, 1], [1, 1]],
    "max_total_degree": 64
  })", R"({"koszul": false, "witness": "x3∘x2∘x1", "saturated": false})"));

  out.push_back(make("f2", "toric", R"({
    "free_rank": 2, "torsion": [],
    "variables": [{"name": "x1", "degree": [1, 0]}, {"name": "x2", "degree": [-2, 1]},
                  {"name": "x3", "degree": [1, 0]}, {"name": "x4", "degree": [0, 1]}],
    "collection": [[0, 0], [1, 0], [0, 1], [1, 1]],
    "max_total_degree": 64
  })", R"({"koszul": true})"));

  out.push_back(make("f3", "toric", R"({
    "free_rank": 2, "torsion": [],
    "variables": [{"name": "x1", "degree": [1, 0]}, {"name": "x2", "degree": [-3, 1]},
                  {"name": "x3", "degree": [1, 0]}, {"name": "x4", "degree": [0, 1]}],
    "collection": [[0, 0], [1, 0], [0, 1], [1, 1]],
    "max_total_degree": 64
  })", R"({"koszul": true})"));

  out.push_back(make("p1xp1", "toric", R"({
    "free_rank": 2, "torsion": [],
    "variables": [{"name": "x0", "degree": [1, 0]}, {"name": "x1", "degree": [1, 0]},
                  {"name": "y0", "degree": [0, 1]}, {"name": "y1", "degree": [0, 1]}],
    "collection": [[0, 0], [1, 0], [0, 1], [1, 1]],
    "max_total_degree": 64
  })", R"({"koszul": true, "potential_exists": true, "strong_after_shift": true, "potential": [0, 1, 1, 2]})"));

  out.push_back(make("p2", "toric", R"({
    "free_rank": 1, "torsion": [],
    "variables": [{"name": "x0", "degree": [1]}, {"name": "x1", "degree": [1]}, {"name": "x2", "degree": [1]}],
    "collection": [[0], [1], [2]],
    "max_total_degree": 64
  })", R"({"koszul": true, "potential_exists": true, "strong_after_shift": true})"));

  out.push_back(make("wp112", "toric", R"({
    "free_rank": 1, "torsion": [],
    "variables": [{"name": "x0", "degree": [1]}, {"name": "x1", "degree": [1]}, {"name": "x2", "degree": [2]}],
    "collection": [[0], [1], [2], [3]],
    "max_total_degree": 64
  })", R"({"koszul": true, "potential_exists": false, "strong_after_shift": false})"));
  return out;
}

}  // namespace

const std::vector<Fixture>& bundled_fixtures() {
  static const std::vector<Fixture> fixtures = build();
  return fixtures;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : bundled_fixtures())
    if (f.name == name) return f;
  fail(ErrorKind::UnknownObject, "no bundled fixture named '" + name + "'");
}

std::vector<std::filesystem::path> emit_fixtures(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) fail(ErrorKind::Io, "cannot write " + path.string());
    written.push_back(path);
  };
  Json manifest = Json::array();
  for (const auto& f : bundled_fixtures()) {
    const auto text = f.kind == "toric" ? toric_to_toml(toric_from_json(f.document)) : f.document.dump(2) + "\n";
    write(dir / f.file, text);
    manifest.push_back({{"name", f.name}, {"file", f.file}, {"kind", f.kind}, {"expected", f.expected}});
  }
  write(dir / "manifest.json", manifest.dump(2) + "\n");
  return written;
}

}  // namespace koszul
