#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "koszul/category.hpp"
#include "koszul/poset.hpp"
#include "koszul/rs.hpp"
#include "koszul/toric.hpp"

namespace koszul {

using Json = nlohmann::json;

// Throws ParseError with the 1-based line and column of the failure.
Json parse_json(std::string_view text);
// Subset of TOML: tables, arrays of tables, inline arrays and tables,
// integers, booleans, basic strings and comments.
Json parse_toml(std::string_view text);
// Reads a file and parses it as TOML when the extension is .toml, JSON otherwise.
Json load_document(const std::filesystem::path& path);

FiniteGradedCategory category_from_json(const Json& doc);
Json category_to_json(const FiniteGradedCategory& cat);

QuiverPresentation quiver_from_json(const Json& doc);
Json quiver_to_json(const QuiverPresentation& quiver);

FinitePoset poset_from_json(const Json& doc);
Json poset_to_json(const FinitePoset& poset);

enum class DocumentKind { Category, Quiver, Poset };
DocumentKind detect_kind(const Json& doc);

// Any of the three shapes, turned into a category (posets via their interval category).
FiniteGradedCategory load_category(const Json& doc);

struct RsInput {
  FinitePoset poset;
  IntervalRelation relation;
};

IntervalRelation relation_from_json(const FinitePoset& poset, const Json& classes);
RsInput rs_input_from_json(const Json& doc);
Json relation_to_json(const FinitePoset& poset, const IntervalRelation& rel);

struct FibrationInput {
  Functor functor;
  // set when the domain document is a poset
  std::optional<FinitePoset> domain_poset;
};

FibrationInput fibration_from_json(const Json& doc);

ToricCollectionSpec toric_from_json(const Json& doc);
Json toric_to_json(const ToricCollectionSpec& spec);
std::string toric_to_toml(const ToricCollectionSpec& spec);

}  // namespace koszul
