#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/io.hpp"

namespace koszul {

namespace {

class TomlReader {
 public:
  explicit TomlReader(std::string_view text) : s_(text) {}

  Json parse() {
    Json root = Json::object();
    Json* current = &root;
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        current = parse_header(root);
      } else {
        auto key = parse_key();
        skip_ws();
        if (peek() != '=') error("expected '='");
        advance();
        skip_ws();
        Json* target = descend(*current, key, key.size() - 1);
        const auto& last = key.back();
        if (target->contains(last)) error("duplicate key '" + last + "'");
        (*target)[last] = parse_value();
      }
      end_of_line();
    }
    return root;
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void error(const std::string& message) const { throw ParseError(message, line_, col_); }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
  }
  void skip_comment() {
    if (peek() != '#') return;
    while (!eof() && peek() != '\n') advance();
  }
  void skip_blank_lines() {
    while (!eof()) {
      skip_ws();
      skip_comment();
      if (peek() == '\n' || peek() == '\r')
        advance();
      else
        break;
    }
  }
  // whitespace, newlines and comments, as allowed inside arrays
  void skip_all() {
    while (!eof()) {
      skip_ws();
      skip_comment();
      if (peek() == '\n' || peek() == '\r')
        advance();
      else
        break;
    }
  }
  void end_of_line() {
    skip_ws();
    skip_comment();
    if (peek() == '\r') advance();
    if (eof()) return;
    if (peek() != '\n') error("unexpected character '" + std::string(1, peek()) + "'");
    advance();
  }

  std::vector<std::string> parse_key() {
    std::vector<std::string> parts;
    while (true) {
      skip_ws();
      if (peek() == '"') {
        parts.push_back(parse_basic_string());
      } else {
        std::string part;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
          part += peek();
          advance();
        }
        if (part.empty()) error("expected a key");
        parts.push_back(part);
      }
      skip_ws();
      if (peek() != '.') return parts;
      advance();
    }
  }

  Json* descend(Json& from, const std::vector<std::string>& path, std::size_t count) {
    Json* node = &from;
    for (std::size_t i = 0; i < count; ++i) {
      Json& next = (*node)[path[i]];
      if (next.is_null()) next = Json::object();
      if (next.is_array() && !next.empty() && next.back().is_object())
        node = &next.back();
      else if (next.is_object())
        node = &next;
      else
        error("'" + path[i] + "' is not a table");
    }
    return node;
  }

  Json* parse_header(Json& root) {
    advance();
    const bool array = peek() == '[';
    if (array) advance();
    auto path = parse_key();
    if (peek() != ']') error("expected ']'");
    advance();
    if (array) {
      if (peek() != ']') error("expected ']]'");
      advance();
    }
    Json* parent = descend(root, path, path.size() - 1);
    Json& slot = (*parent)[path.back()];
    if (array) {
      if (slot.is_null()) slot = Json::array();
      if (!slot.is_array()) error("'" + path.back() + "' is not an array of tables");
      slot.push_back(Json::object());
      return &slot.back();
    }
    std::string joined;
    for (const auto& p : path) joined += p + '.';
    if (!defined_.insert(joined).second) error("table '" + path.back() + "' defined twice");
    if (slot.is_null()) slot = Json::object();
    if (!slot.is_object()) error("'" + path.back() + "' is not a table");
    return &slot;
  }

  std::string parse_basic_string() {
    advance();
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') error("unterminated string");
      char c = peek();
      advance();
      if (c == '"') return out;
      if (c != '\\') {
        out += c;
        continue;
      }
      char e = peek();
      advance();
      switch (e) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        default: error("unsupported escape");
      }
    }
  }

  std::string parse_literal_string() {
    advance();
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') error("unterminated string");
      char c = peek();
      advance();
      if (c == '\'') return out;
      out += c;
    }
  }

  Json parse_value() {
    const char c = peek();
    if (c == '"') return parse_basic_string();
    if (c == '\'') return parse_literal_string();
    if (c == '[') return parse_array();
    if (c == '{') return parse_inline_table();
    if (s_.substr(pos_, 4) == "true") {
      for (int i = 0; i < 4; ++i) advance();
      return true;
    }
    if (s_.substr(pos_, 5) == "false") {
      for (int i = 0; i < 5; ++i) advance();
      return false;
    }
    return parse_number();
  }

  Json parse_number() {
    std::string digits;
    if (peek() == '+' || peek() == '-') {
      digits += peek();
      advance();
    }
    bool is_float = false;
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '.' ||
                      peek() == 'e' || peek() == 'E')) {
      if (peek() == '.' || peek() == 'e' || peek() == 'E') is_float = true;
      if (peek() != '_') digits += peek();
      advance();
    }
    if (digits.empty() || digits == "+" || digits == "-") error("expected a value");
    try {
      std::size_t used = 0;
      if (is_float) {
        double v = std::stod(digits, &used);
        if (used != digits.size()) error("malformed number");
        return v;
      }
      long long v = std::stoll(digits, &used);
      if (used != digits.size()) error("malformed number");
      return v;
    } catch (const std::logic_error&) {
      error("malformed number");
    }
  }

  Json parse_array() {
    advance();
    Json out = Json::array();
    while (true) {
      skip_all();
      if (peek() == ']') {
        advance();
        return out;
      }
      out.push_back(parse_value());
      skip_all();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() != ']') error("expected ',' or ']'");
    }
  }

  Json parse_inline_table() {
    advance();
    Json out = Json::object();
    skip_ws();
    if (peek() == '}') {
      advance();
      return out;
    }
    while (true) {
      auto key = parse_key();
      if (peek() != '=') error("expected '='");
      advance();
      skip_ws();
      Json* target = descend(out, key, key.size() - 1);
      if (target->contains(key.back())) error("duplicate key '" + key.back() + "'");
      (*target)[key.back()] = parse_value();
      skip_ws();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() != '}') error("expected ',' or '}'");
      advance();
      return out;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::set<std::string> defined_;
};

}  // namespace

Json parse_toml(std::string_view text) { return TomlReader(text).parse(); }

}  // namespace koszul
