#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyaut/context.hpp"
#include "polyaut/monomial.hpp"

namespace polyaut {

/// Monomial order over a variable priority (a permutation of context
/// indices, highest priority first).
///
///  - Lex: compare exponents of the priority list in order.
///  - GradedLex ("lexdeg"): total degree first, ties broken by Lex.
///  - GradedRevLex: total degree first, ties broken by the exponent of the
///    lowest-priority variable where the monomials differ; the smaller
///    exponent wins.
class MonomialOrder {
 public:
  enum class Kind { Lex, GradedLex, GradedRevLex };

  MonomialOrder(Kind kind, std::vector<std::size_t> priority);

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder graded_lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  /// Partial priority lists are completed with the remaining variables in
  /// context order.
  static MonomialOrder from_names(Kind kind, const VariableContext& ctx,
                                  std::span<const std::string> priority);
  static MonomialOrder lexdeg(const VariableContext& ctx, std::span<const std::string> priority) {
    return from_names(Kind::GradedLex, ctx, priority);
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) == std::strong_ordering::greater;
  }

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::size_t size() const noexcept { return priority_.size(); }

  /// e.g. "grevlex(x > y > z)"
  std::string describe(const VariableContext& ctx) const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  Kind kind_;
  std::vector<std::size_t> priority_;
};

std::string_view to_string(MonomialOrder::Kind kind);
/// "lex", "grlex"/"lexdeg", "grevlex". Throws PreconditionError.
MonomialOrder::Kind parse_order_kind(std::string_view text);

/// Canonical storage order of Polynomial terms: grevlex in context order.
std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) noexcept;

}  // namespace polyaut
