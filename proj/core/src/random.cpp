#include "polyaut/random.hpp"

#include "polyaut/errors.hpp"

namespace polyaut {

int RandomPolynomials::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational RandomPolynomials::nonzero_coefficient(int bound) {
  int c = 0;
  while (c == 0) c = integer(-bound, bound);
  return c;
}

Monomial RandomPolynomials::monomial(std::size_t nvars, const RandomPolySpec& spec) {
  std::vector<std::size_t> vars = spec.vars;
  if (vars.empty())
    for (std::size_t i = 0; i < nvars; ++i) vars.push_back(i);
  Monomial m(nvars);
  const auto degree = static_cast<unsigned>(integer(0, static_cast<int>(spec.max_degree)));
  for (unsigned d = 0; d < degree; ++d) {
    const auto v = vars[static_cast<std::size_t>(integer(0, static_cast<int>(vars.size()) - 1))];
    if (spec.capped_var && *spec.capped_var == v && m[v] >= spec.capped_degree) continue;
    m.set(v, m[v] + 1);
  }
  return m;
}

Polynomial RandomPolynomials::polynomial(const ContextPtr& ctx, const RandomPolySpec& spec) {
  const auto terms = integer(1, static_cast<int>(spec.max_terms));
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) out.push_back(Term{monomial(ctx->size(), spec), nonzero_coefficient(spec.coeff_bound)});
  return Polynomial::from_terms(ctx, std::move(out));
}

Polynomial RandomPolynomials::nonconstant(const ContextPtr& ctx, const RandomPolySpec& spec) {
  if (spec.max_degree == 0) throw PreconditionError("nonconstant polynomial needs max_degree >= 1");
  while (true) {
    auto p = polynomial(ctx, spec);
    if (!p.is_constant()) return p;
  }
}

PolyMap RandomPolynomials::tame_automorphism(const ContextPtr& ctx, unsigned steps, unsigned max_degree) {
  const auto n = ctx->size();
  PolyMap result = PolyMap::identity(ctx);
  if (n == 0) return result;
  for (unsigned s = 0; s < steps; ++s) {
    const auto v = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1));
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(ctx, i));
    if (n > 1 && integer(0, 1) == 0) {
      // Elementary: v -> v + c * m(other variables).
      RandomPolySpec spec;
      spec.max_degree = max_degree;
      for (std::size_t i = 0; i < n; ++i)
        if (i != v) spec.vars.push_back(i);
      Monomial m = monomial(n, spec);
      images[v] = images[v] + Polynomial::monomial(ctx, m, nonzero_coefficient(2));
    } else {
      // Shear with translation: v -> v + c * w + t (w != v), or v -> -v + t.
      Polynomial shift = Polynomial::constant(ctx, integer(-2, 2));
      if (n > 1) {
        auto w = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 2));
        if (w >= v) ++w;
        images[v] = images[v] + Polynomial::variable(ctx, w) * nonzero_coefficient(2) + shift;
      } else {
        images[v] = -images[v] + shift;
      }
    }
    result = result.then(PolyMap(ctx, std::move(images)));
  }
  return result;
}

}  // namespace polyaut
