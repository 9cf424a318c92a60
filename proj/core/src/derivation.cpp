#include "polyaut/derivation.hpp"

#include "polyaut/errors.hpp"

namespace polyaut {

Derivation::Derivation(ContextPtr ctx, std::vector<Polynomial> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
  if (images_.size() != ctx_->size()) throw PreconditionError("derivation needs one image per variable");
  for (const auto& img : images_) require_same_context(ctx_, img.context(), "derivation image");
}

Derivation Derivation::partial(const ContextPtr& ctx, std::size_t var) {
  std::vector<Polynomial> images(ctx->size(), Polynomial(ctx));
  images.at(var) = Polynomial::constant(ctx, 1);
  return Derivation(ctx, std::move(images));
}

Polynomial Derivation::operator()(const Polynomial& g) const {
  require_same_context(ctx_, g.context(), "derive");
  Polynomial out(ctx_);
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (images_[v].is_zero() || !g.depends_on(v)) continue;
    out += g.partial(v) * images_[v];
  }
  return out;
}

Polynomial jacobian_bracket(const Polynomial& a, const Polynomial& b, std::size_t x, std::size_t z) {
  require_same_context(a.context(), b.context(), "jacobian bracket");
  return a.partial(x) * b.partial(z) - a.partial(z) * b.partial(x);
}

Derivation jacobian_derivation(const Polynomial& q, std::string_view x, std::string_view z) {
  const auto& ctx = q.context();
  const auto xi = ctx->index_of(x), zi = ctx->index_of(z);
  if (xi == zi) throw PreconditionError("jacobian derivation needs two distinct variables");
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < ctx->size(); ++v)
    images.push_back(jacobian_bracket(q, Polynomial::variable(ctx, v), xi, zi));
  Derivation d(ctx, std::move(images));
  d.origin_ = JacobianOrigin{q, xi, zi};
  return d;
}

namespace {

std::optional<std::size_t> bounded_variable(const Derivation& d) {
  const auto& origin = d.jacobian_origin();
  if (origin && !origin->q.depends_on(origin->z)) return origin->z;
  return std::nullopt;
}

}  // namespace

NilpotencyReport nilpotency_index(const Derivation& d, const Polynomial& g, std::optional<std::uint64_t> cap) {
  require_same_context(d.context(), g.context(), "nilpotency");
  NilpotencyReport report{g, std::nullopt, 0, std::nullopt, true};
  const auto z = bounded_variable(d);
  if (z) report.bound = static_cast<std::uint64_t>(g.degree(*z).value_or(-1) + 1);
  if (cap) {
    if (*cap < 1) throw PreconditionError("nilpotency cap must be at least 1");
    report.cap = *cap;
  } else if (report.bound) {
    report.cap = *report.bound + 1;
  } else {
    throw PreconditionError("derivation has no degree bound; supply a nilpotency cap");
  }

  Polynomial current = g;
  for (std::uint64_t i = 0;; ++i) {
    if (current.is_zero()) {
      report.index = i;
      return report;
    }
    if (i == report.cap) return report;
    Polynomial next = d(current);
    if (z && !(next.degree(*z) < current.degree(*z))) report.degree_dropped_each_step = false;
    current = std::move(next);
  }
}

bool degree_drop_check(const Derivation& d, const Polynomial& g) {
  const auto z = bounded_variable(d);
  if (!z) throw PreconditionError("degree drop check needs a jacobian derivation J(q, .) with q free of z");
  return d(g).degree(*z) < g.degree(*z);
}

bool chain_rule_factor_check(const Polynomial& u, const Polynomial& v, const Polynomial& p, const Polynomial& f,
                             std::string_view x, std::string_view z) {
  require_same_context(u.context(), v.context(), "chain rule check");
  require_same_context(p.context(), f.context(), "chain rule check");
  if (p.vars().size() != 2) throw PreconditionError("p and f must live over a two-variable context");
  const auto& ctx = u.context();
  const auto xi = ctx->index_of(x), zi = ctx->index_of(z);
  const PolyMap uv(p.context(), {u, v});
  const Polynomial lhs = jacobian_bracket(substitute(p, uv), substitute(f, uv), xi, zi);
  const Polynomial outer = jacobian_bracket(p, f, 0, 1);
  const Polynomial rhs = jacobian_bracket(u, v, xi, zi) * substitute(outer, uv);
  return lhs == rhs;
}

bool has_slice(const Derivation& d, const Polynomial& s) { return d(s).is_one(); }

bool in_kernel(const Derivation& d, const Polynomial& f) { return d(f).is_zero(); }

Derivation extend_derivation(const Derivation& d, std::string_view new_var) {
  const auto& ctx = d.context();
  if (ctx->contains(new_var))
    throw PreconditionError("variable '" + std::string(new_var) + "' already exists in the context");
  auto names = ctx->names();
  names.emplace_back(new_var);
  auto bigger = make_context(std::move(names));
  std::vector<Polynomial> images;
  for (const auto& img : d.images()) images.push_back(img.rebase(bigger));
  images.emplace_back(bigger);
  Derivation out(bigger, std::move(images));
  if (const auto& origin = d.jacobian_origin())
    out.origin_ = JacobianOrigin{origin->q.rebase(bigger), origin->x, origin->z};
  return out;
}

}  // namespace polyaut
