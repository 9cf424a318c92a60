#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "polyaut/polynomial.hpp"

namespace polyaut {

/// Records that a derivation is g -> J_{x,z}(q, g).
struct JacobianOrigin {
  Polynomial q;
  std::size_t x;
  std::size_t z;
};

/// A derivation of the polynomial ring, given by its values on the
/// variables. It acts on any polynomial through linearity and the Leibniz
/// rule, D(g) = sum_v dg/dv * D(v).
class Derivation {
 public:
  Derivation(ContextPtr ctx, std::vector<Polynomial> images);

  /// d/d(var)
  static Derivation partial(const ContextPtr& ctx, std::size_t var);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::span<const Polynomial> images() const noexcept { return images_; }
  const Polynomial& image(std::size_t var) const { return images_.at(var); }
  const std::optional<JacobianOrigin>& jacobian_origin() const noexcept { return origin_; }

  Polynomial operator()(const Polynomial& g) const;

  bool operator==(const Derivation& o) const { return same_context(ctx_, o.ctx_) && images_ == o.images_; }

 private:
  friend Derivation jacobian_derivation(const Polynomial&, std::string_view, std::string_view);
  friend Derivation extend_derivation(const Derivation&, std::string_view);

  ContextPtr ctx_;
  std::vector<Polynomial> images_;
  std::optional<JacobianOrigin> origin_;
};

inline Polynomial derive(const Derivation& d, const Polynomial& g) { return d(g); }

/// J_{x,z}(a, b) = da/dx * db/dz - da/dz * db/dx
Polynomial jacobian_bracket(const Polynomial& a, const Polynomial& b, std::size_t x, std::size_t z);

/// g -> J_{x,z}(q, g). Throws PreconditionError when x == z.
Derivation jacobian_derivation(const Polynomial& q, std::string_view x, std::string_view z);

struct NilpotencyReport {
  Polynomial subject;
  /// Smallest i with D^i(subject) = 0; empty when the cap was reached first.
  std::optional<std::uint64_t> index;
  std::uint64_t cap;
  /// deg_z(subject) + 1 when D is a Jacobian derivation with q free of z.
  std::optional<std::uint64_t> bound;
  /// For bounded derivations: deg_z dropped at every application.
  bool degree_dropped_each_step;

  bool exceeded_cap() const noexcept { return !index.has_value(); }
  bool within_bound() const noexcept { return index && (!bound || *index <= *bound); }
};

/// Iterates D on g until it vanishes or `cap` applications are made. The
/// default cap is deg_z(g) + 2 when the Jacobian bound applies; otherwise
/// a cap must be given (PreconditionError).
NilpotencyReport nilpotency_index(const Derivation& d, const Polynomial& g,
                                  std::optional<std::uint64_t> cap = std::nullopt);

/// True when deg_z D(g) < deg_z g. Requires D = jacobian_derivation(q, x, z)
/// with q free of z.
bool degree_drop_check(const Derivation& d, const Polynomial& g);

/// Exact check of J_{x,z}(p(u,v), f(u,v)) = J_{x,z}(u,v) * J_{s,t}(p,f)(u,v),
/// where p and f live over a two-variable context (s, t).
bool chain_rule_factor_check(const Polynomial& u, const Polynomial& v, const Polynomial& p, const Polynomial& f,
                             std::string_view x, std::string_view z);

bool has_slice(const Derivation& d, const Polynomial& s);
bool in_kernel(const Derivation& d, const Polynomial& f);

/// The derivation on the context enlarged by new_var that agrees with d and
/// sends new_var to 0.
Derivation extend_derivation(const Derivation& d, std::string_view new_var);

}  // namespace polyaut
