#include "polyaut/report.hpp"

#include <nlohmann/json.hpp>

namespace polyaut {

Report& Report::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Report& Report::add(std::string key, std::vector<std::string> values) {
  fields_.emplace_back(std::move(key), std::move(values));
  return *this;
}

Report& Report::merge(std::string_view prefix, const Report& other) {
  for (const auto& [k, v] : other.fields_) fields_.emplace_back(std::string(prefix) + "." + k, v);
  return *this;
}

const Report::Value* Report::find(std::string_view key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return &v;
  return nullptr;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& [key, value] : fields_) {
    if (const auto* s = std::get_if<std::string>(&value)) {
      out += key + ": " + *s + "\n";
      continue;
    }
    const auto& list = std::get<std::vector<std::string>>(value);
    if (list.empty()) out += key + ": []\n";
    for (std::size_t i = 0; i < list.size(); ++i)
      out += key + "[" + std::to_string(i) + "]: " + list[i] + "\n";
  }
  return out;
}

std::string Report::to_json(int indent) const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, value] : fields_) {
    if (const auto* s = std::get_if<std::string>(&value)) j[key] = *s;
    else j[key] = std::get<std::vector<std::string>>(value);
  }
  return j.dump(indent);
}

}  // namespace polyaut
