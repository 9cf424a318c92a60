#pragma once

#include <compare>
#include <optional>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "polyaut/context.hpp"
#include "polyaut/monomial.hpp"
#include "polyaut/order.hpp"

namespace polyaut {

using Rational = mpq_class;

/// Degree of a polynomial, with a distinguished minus-infinity value for the
/// zero polynomial that orders below every integer.
class Degree {
 public:
  constexpr Degree(std::int64_t value) noexcept : value_(value), neg_inf_(false) {}  // NOLINT
  static constexpr Degree neg_infinity() noexcept { return Degree(); }

  constexpr bool is_neg_infinity() const noexcept { return neg_inf_; }
  /// Pre: !is_neg_infinity().
  constexpr std::int64_t value() const noexcept { return value_; }
  /// Value, with minus infinity mapped to `fallback`.
  constexpr std::int64_t value_or(std::int64_t fallback) const noexcept {
    return neg_inf_ ? fallback : value_;
  }

  constexpr std::strong_ordering operator<=>(const Degree& o) const noexcept {
    if (neg_inf_ || o.neg_inf_) return o.neg_inf_ <=> neg_inf_;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const Degree& o) const noexcept {
    return neg_inf_ == o.neg_inf_ && (neg_inf_ || value_ == o.value_);
  }

  std::string to_string() const { return neg_inf_ ? "-inf" : std::to_string(value_); }

 private:
  constexpr Degree() noexcept : value_(0), neg_inf_(true) {}
  std::int64_t value_;
  bool neg_inf_;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are stored strictly decreasing in the canonical order (grevlex over
/// the context order) with no zero coefficients, so equality is a plain
/// comparison of term lists. Values are immutable once built.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx);

  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, std::size_t var);
  static Polynomial variable(ContextPtr ctx, std::string_view name);
  static Polynomial monomial(ContextPtr ctx, Monomial m, const Rational& c = 1);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const noexcept { return ctx_; }
  const VariableContext& vars() const noexcept { return *ctx_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// The zero polynomial counts as constant.
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(std::uint64_t k) const;
  /// this * c * m, in one pass.
  Polynomial scaled(const Rational& c, const Monomial& m) const;

  /// Compares contexts by variable names, then term lists.
  bool operator==(const Polynomial& o) const;

  Degree degree(std::size_t var) const;
  Degree degree(std::string_view name) const { return degree(ctx_->index_of(name)); }
  Degree total_degree() const;
  bool depends_on(std::size_t var) const;
  bool depends_on(std::string_view name) const { return depends_on(ctx_->index_of(name)); }

  Polynomial partial(std::size_t var) const;
  Polynomial partial(std::string_view name) const { return partial(ctx_->index_of(name)); }

  /// Part of the polynomial whose `var` exponent equals the `var`-degree
  /// (the leading form in that variable, including the power of `var`).
  Polynomial leading_form(std::size_t var) const;
  /// Coefficient of var^e, as a polynomial free of var.
  Polynomial coefficient_of(std::size_t var, Exponent e) const;
  /// Homogeneous component of the given total degree.
  Polynomial homogeneous_component(std::uint64_t degree) const;
  /// Top-degree homogeneous component (zero for zero).
  Polynomial top_form() const;

  /// Throws PreconditionError on the zero polynomial.
  Monomial leading_monomial(const MonomialOrder& order) const;
  Term leading_term(const MonomialOrder& order) const;

  /// Re-expresses the polynomial over `target`, matching variables by name.
  /// Throws UnknownVariable when a variable that actually occurs is missing.
  Polynomial rebase(const ContextPtr& target) const;

 private:
  Polynomial(ContextPtr ctx, std::vector<Term> canonical_terms);

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// Returns lambda with a == lambda * b, if one exists (b nonzero).
std::optional<Rational> scalar_ratio(const Polynomial& a, const Polynomial& b);

/// Assignment of an image polynomial (over a common target context) to
/// every variable of a source context.
class PolyMap {
 public:
  PolyMap(ContextPtr source, std::vector<Polynomial> images);
  static PolyMap identity(const ContextPtr& ctx);

  const ContextPtr& source() const noexcept { return source_; }
  const ContextPtr& target() const noexcept { return target_; }
  const Polynomial& image(std::size_t var) const { return images_.at(var); }
  const Polynomial& image(std::string_view name) const { return images_.at(source_->index_of(name)); }
  std::span<const Polynomial> images() const noexcept { return images_; }

  /// Map sending each source variable v to substitute(image(v), next).
  /// Pre: next.source() matches this->target().
  PolyMap then(const PolyMap& next) const;
  bool is_identity() const;

  bool operator==(const PolyMap& o) const;

 private:
  ContextPtr source_;
  ContextPtr target_;
  std::vector<Polynomial> images_;
};

/// p with every variable replaced by its image under m, fully expanded.
Polynomial substitute(const Polynomial& p, const PolyMap& m);

}  // namespace polyaut
