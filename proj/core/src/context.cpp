#include "polyaut/context.hpp"

#include <cctype>
#include <set>

#include "polyaut/errors.hpp"

namespace polyaut {

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  auto first = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(first) || first == '_')) return false;
  for (char c : s) {
    auto uc = static_cast<unsigned char>(c);
    if (!(std::isalnum(uc) || uc == '_')) return false;
  }
  return true;
}

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw PreconditionError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VariableContext::find(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VariableContext::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownVariable(std::string(name));
}

std::string VariableContext::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ", ";
    out += names_[i];
  }
  return out;
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

ContextPtr make_context(std::string_view comma_list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  if (trim(comma_list).empty()) return make_context(std::vector<std::string>{});
  while (true) {
    auto comma = comma_list.find(',', start);
    auto piece = trim(comma_list.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                               : comma - start));
    names.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return make_context(std::move(names));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

void require_same_context(const ContextPtr& a, const ContextPtr& b, std::string_view what) {
  if (!same_context(a, b))
    throw ContextMismatch(std::string(what) + ": context mismatch (" + (a ? a->to_string() : "") +
                          ") vs (" + (b ? b->to_string() : "") + ")");
}

}  // namespace polyaut
