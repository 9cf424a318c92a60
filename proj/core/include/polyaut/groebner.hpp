#pragma once

#include <cstdint>
#include <vector>

#include "polyaut/polynomial.hpp"

namespace polyaut {

/// Watchdog for a Buchberger run. Exceeding either cap raises
/// ResourceLimitExceeded; a cap is never turned into an answer.
struct GroebnerLimits {
  /// Largest total degree of an S-pair lcm that may be processed.
  std::uint64_t max_degree = 40;
  /// Largest number of S-pairs that may be reduced.
  std::uint64_t max_pairs = 5000;
};

struct GroebnerStats {
  std::uint64_t pairs_reduced = 0;
  std::uint64_t skipped_coprime = 0;
  std::uint64_t skipped_chain = 0;
  std::uint64_t zero_reductions = 0;
};

class Ideal {
 public:
  /// Zero generators are dropped.
  Ideal(ContextPtr ctx, std::vector<Polynomial> generators, MonomialOrder order);
  Ideal(std::vector<Polynomial> generators, MonomialOrder order);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::span<const Polynomial> generators() const noexcept { return generators_; }
  const MonomialOrder& order() const noexcept { return order_; }

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
};

/// Reduced, monic Groebner basis, sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(ContextPtr ctx, MonomialOrder order, std::vector<Polynomial> elements, GroebnerStats stats = {});

  const ContextPtr& context() const noexcept { return ctx_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::span<const Polynomial> elements() const noexcept { return elements_; }
  std::span<const Monomial> leading_monomials() const noexcept { return leading_; }
  const GroebnerStats& stats() const noexcept { return stats_; }

  /// The basis is {1}.
  bool is_unit() const noexcept;

 private:
  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leading_;
  GroebnerStats stats_;
};

/// Buchberger's algorithm with normal (sugar) pair selection and
/// Buchberger's coprime and chain criteria. Deterministic for a fixed input.
GroebnerBasis buchberger(const Ideal& ideal, const GroebnerLimits& limits = {});

/// Fully reduced remainder of f modulo the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);
bool ideal_membership(const Polynomial& f, const GroebnerBasis& g);

/// Weak Nullstellensatz: no common zero over the algebraic closure iff {1}.
bool is_variety_empty(const GroebnerBasis& g);

/// Krull dimension of the quotient ring: the size of a largest variable set
/// containing the support of no leading monomial. -1 for the unit ideal.
int ideal_dimension(const GroebnerBasis& g);

/// Post-hoc check that every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& g);

/// Mutual inclusion of the two ideals.
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);

}  // namespace polyaut
