#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polyaut {

/// Ordered list of distinct variable names. Order is significant: it fixes
/// the canonical term order, gradient component order and display order.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const noexcept;
  /// Throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const noexcept { return find(name).has_value(); }

  /// "x, y, z"
  std::string to_string() const;

  bool operator==(const VariableContext& other) const noexcept { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> names);
/// Comma separated list, e.g. "x,y,z". Whitespace around names is ignored.
ContextPtr make_context(std::string_view comma_list);

bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept;
/// Throws ContextMismatch when the contexts differ.
void require_same_context(const ContextPtr& a, const ContextPtr& b, std::string_view what);

bool is_identifier(std::string_view s) noexcept;

}  // namespace polyaut
