#include "polyaut/order.hpp"

#include <numeric>

#include "polyaut/errors.hpp"

namespace polyaut {

namespace {

std::vector<std::size_t> identity_priority(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<bool> seen(priority_.size(), false);
  for (auto v : priority_) {
    if (v >= priority_.size() || seen[v])
      throw PreconditionError("monomial order priority is not a permutation");
    seen[v] = true;
  }
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return {Kind::Lex, identity_priority(nvars)}; }
MonomialOrder MonomialOrder::graded_lex(std::size_t nvars) {
  return {Kind::GradedLex, identity_priority(nvars)};
}
MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  return {Kind::GradedRevLex, identity_priority(nvars)};
}

MonomialOrder MonomialOrder::from_names(Kind kind, const VariableContext& ctx,
                                        std::span<const std::string> priority) {
  std::vector<std::size_t> order;
  std::vector<bool> used(ctx.size(), false);
  for (const auto& name : priority) {
    auto i = ctx.index_of(name);
    if (used[i]) throw PreconditionError("variable '" + name + "' listed twice in order priority");
    used[i] = true;
    order.push_back(i);
  }
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (!used[i]) order.push_back(i);
  return {kind, std::move(order)};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (kind_ != Kind::Lex) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da <=> db;
  }
  if (kind_ == Kind::GradedRevLex) {
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    }
    return std::strong_ordering::equal;
  }
  for (auto v : priority_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe(const VariableContext& ctx) const {
  std::string out(to_string(kind_));
  out += '(';
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (i) out += " > ";
    out += ctx.name(priority_[i]);
  }
  out += ')';
  return out;
}

std::string_view to_string(MonomialOrder::Kind kind) {
  switch (kind) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::GradedLex: return "lexdeg";
    case MonomialOrder::Kind::GradedRevLex: return "grevlex";
  }
  return "?";
}

MonomialOrder::Kind parse_order_kind(std::string_view text) {
  if (text == "lex") return MonomialOrder::Kind::Lex;
  if (text == "lexdeg" || text == "grlex" || text == "deglex") return MonomialOrder::Kind::GradedLex;
  if (text == "grevlex" || text == "degrevlex") return MonomialOrder::Kind::GradedRevLex;
  throw PreconditionError("unknown monomial order '" + std::string(text) + "'");
}

std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) noexcept {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace polyaut
