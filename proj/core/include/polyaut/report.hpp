#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace polyaut {

/// Ordered key/value report. Text form is one "key: value" line per scalar
/// field and one "key[i]: value" line per list item; the JSON form carries
/// the same fields in the same order.
class Report {
 public:
  using Value = std::variant<std::string, std::vector<std::string>>;

  Report& add(std::string key, std::string value);
  Report& add(std::string key, std::vector<std::string> values);
  Report& add(std::string key, bool value) { return add(std::move(key), std::string(value ? "true" : "false")); }
  Report& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
  /// Appends every field of `other` with "prefix." prepended to its keys.
  Report& merge(std::string_view prefix, const Report& other);

  const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }
  /// First value stored under key, or nullptr.
  const Value* find(std::string_view key) const;

  std::string to_text() const;
  std::string to_json(int indent = 2) const;

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

}  // namespace polyaut
