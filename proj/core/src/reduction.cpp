#include "polyaut/reduction.hpp"

#include <stdexcept>

#include "polyaut/errors.hpp"
#include "polyaut/expr.hpp"
#include "polyaut/jacobian.hpp"

namespace polyaut {

Move Move::elem_i(const Rational& mu, unsigned k) {
  Move m{MoveKind::ElemI};
  m.mu = mu;
  m.k = k;
  m.validate();
  return m;
}

Move Move::elem_ii(const Rational& mu, unsigned k) {
  Move m{MoveKind::ElemII};
  m.mu = mu;
  m.k = k;
  m.validate();
  return m;
}

Move Move::linear(const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& e,
                  const Rational& f) {
  Move m{MoveKind::Linear};
  m.a = a;
  m.b = b;
  m.c = c;
  m.d = d;
  m.e = e;
  m.f = f;
  m.validate();
  return m;
}

void Move::validate() const {
  switch (kind) {
    case MoveKind::ElemI:
    case MoveKind::ElemII:
      if (mu == 0) throw PreconditionError("elementary move needs mu != 0");
      if (k < 2) throw PreconditionError("elementary move needs k >= 2");
      return;
    case MoveKind::Linear:
      if (a * d - b * c == 0) throw PreconditionError("degenerate linear move (zero determinant)");
      return;
  }
}

std::string Move::describe() const {
  auto r = [](const Rational& q) { return format_rational(q); };
  switch (kind) {
    case MoveKind::ElemI: return "ElemI mu=" + r(mu) + " k=" + std::to_string(k) + ": u <- u + (" + r(mu) + ")*v^" + std::to_string(k);
    case MoveKind::ElemII: return "ElemII mu=" + r(mu) + " k=" + std::to_string(k) + ": v <- v + (" + r(mu) + ")*u^" + std::to_string(k);
    case MoveKind::Linear:
      return "Linear: u <- (" + r(a) + ")*u + (" + r(b) + ")*v + (" + r(e) + "), v <- (" + r(c) + ")*u + (" + r(d) +
             ")*v + (" + r(f) + ")";
  }
  return "?";
}

PolyPair apply_move(const PolyPair& p, const Move& m) {
  m.validate();
  require_same_context(p.u.context(), p.v.context(), "apply move");
  const auto& ctx = p.u.context();
  switch (m.kind) {
    case MoveKind::ElemI: return {p.u + p.v.pow(m.k) * m.mu, p.v};
    case MoveKind::ElemII: return {p.u, p.v + p.u.pow(m.k) * m.mu};
    case MoveKind::Linear:
      return {p.u * m.a + p.v * m.b + Polynomial::constant(ctx, m.e),
              p.u * m.c + p.v * m.d + Polynomial::constant(ctx, m.f)};
  }
  throw std::logic_error("unreachable move kind");
}

Move invert(const Move& m) {
  m.validate();
  switch (m.kind) {
    case MoveKind::ElemI: return Move::elem_i(-m.mu, m.k);
    case MoveKind::ElemII: return Move::elem_ii(-m.mu, m.k);
    case MoveKind::Linear: {
      // (u', v') = A (u, v) + t  =>  (u, v) = A^{-1} (u', v') - A^{-1} t
      const Rational det = m.a * m.d - m.b * m.c;
      const Rational ia = m.d / det, ib = -m.b / det, ic = -m.c / det, id = m.a / det;
      return Move::linear(ia, ib, ic, id, -(ia * m.e + ib * m.f), -(ic * m.e + id * m.f));
    }
  }
  throw std::logic_error("unreachable move kind");
}

std::uint64_t DegreeMeasure::of(const Polynomial& p) const {
  const Degree d = kind == Kind::Total ? p.total_degree() : p.degree(var);
  return static_cast<std::uint64_t>(d.value_or(0));
}

namespace {

Polynomial leading_form(const Polynomial& p, const DegreeMeasure& measure) {
  return measure.kind == DegreeMeasure::Kind::Total ? p.top_form() : p.leading_form(measure.var);
}

}  // namespace

ReducedCheck find_lowering_move(const PolyPair& p, const DegreeMeasure& measure) {
  require_same_context(p.u.context(), p.v.context(), "reduction predicate");
  const auto du = measure.of(p.u), dv = measure.of(p.v);
  if (p.u.is_zero() || p.v.is_zero()) return {true, std::nullopt};
  const Polynomial lu = leading_form(p.u, measure), lv = leading_form(p.v, measure);

  if (dv >= 1 && du % dv == 0 && du / dv >= 2) {
    const auto k = static_cast<unsigned>(du / dv);
    if (auto lambda = scalar_ratio(lu, lv.pow(k))) return {false, Move::elem_i(-*lambda, k)};
  }
  if (du >= 1 && dv % du == 0 && dv / du >= 2) {
    const auto k = static_cast<unsigned>(dv / du);
    if (auto lambda = scalar_ratio(lv, lu.pow(k))) return {false, Move::elem_ii(-*lambda, k)};
  }
  if (du == dv && du >= 1) {
    if (auto lambda = scalar_ratio(lv, lu)) return {false, Move::linear(1, 0, -*lambda, 1)};
  }
  return {true, std::nullopt};
}

ReducedCheck is_z_reduced(const PolyPair& p, std::string_view z) {
  return find_lowering_move(p, DegreeMeasure{DegreeMeasure::Kind::Variable, p.u.vars().index_of(z)});
}

ReducedCheck is_elementary_reduced(const PolyPair& p) {
  if (p.u.vars().size() > 2)
    throw PreconditionError("elementary reduction is defined for two-variable pairs; context has " +
                            std::to_string(p.u.vars().size()) + " variables");
  return find_lowering_move(p, DegreeMeasure{DegreeMeasure::Kind::Total});
}

std::pair<PolyPair, ReductionTrace> reduce_pair(const PolyPair& p, const DegreeMeasure& measure) {
  ReductionTrace trace;
  trace.measure = measure.kind == DegreeMeasure::Kind::Total ? "total" : p.u.vars().name(measure.var);
  PolyPair current = p;
  while (true) {
    auto check = find_lowering_move(current, measure);
    if (check.reduced) break;
    const auto before = measure.sum(current);
    current = apply_move(current, *check.witness);
    const auto after = measure.sum(current);
    if (after >= before) throw std::logic_error("reduction witness did not lower the degree sum");
    trace.entries.push_back(TraceEntry{*check.witness, before, after});
  }
  return {std::move(current), std::move(trace)};
}

std::pair<PolyPair, ReductionTrace> z_reduce(const PolyPair& p, std::string_view z) {
  return reduce_pair(p, DegreeMeasure{DegreeMeasure::Kind::Variable, p.u.vars().index_of(z)});
}

std::pair<PolyPair, ReductionTrace> elementary_reduce(const PolyPair& p) {
  if (p.u.vars().size() > 2) throw PreconditionError("elementary reduction is defined for two-variable pairs");
  return reduce_pair(p, DegreeMeasure{DegreeMeasure::Kind::Total});
}

Report trace_report(const ReductionTrace& trace) {
  Report r;
  r.add("measure", trace.measure);
  r.add("moves", std::to_string(trace.entries.size()));
  std::vector<std::string> lines;
  for (const auto& e : trace.entries)
    lines.push_back(e.move.describe() + " [" + std::to_string(e.before) + " -> " + std::to_string(e.after) + "]");
  r.add("trace", std::move(lines));
  return r;
}

BlowupReport degree_blowup_experiment(const Polynomial& p, const PolyPair& pair, unsigned m, unsigned n,
                                      const Rational& c, std::int64_t bound, std::string_view x,
                                      std::string_view y, std::string_view z) {
  if (p.vars().size() != 2) throw PreconditionError("p must be a two-variable polynomial");
  if (p.is_constant()) throw PreconditionError("p must be nonconstant");
  if (m < 1 || n < 1) throw PreconditionError("exponents m and n must be at least 1");
  if (bound < 0) throw PreconditionError("degree bound N must be non-negative");
  require_same_context(pair.u.context(), pair.v.context(), "blowup pair");
  const auto& ctx = pair.u.context();
  const auto xi = ctx->index_of(x), yi = ctx->index_of(y), zi = ctx->index_of(z);
  if (!pair.u.depends_on(zi) || !pair.v.depends_on(zi))
    throw PreconditionError("both members of the pair must depend on " + std::string(z));
  if (auto check = is_z_reduced(pair, z); !check.reduced)
    throw PreconditionError("pair is not " + std::string(z) + "-reduced (witness: " + check.witness->describe() + ")");
  const std::vector<Polynomial> members{pair.u, pair.v};
  if (algebraically_dependent(members)) throw PreconditionError("pair is algebraically dependent");

  const Polynomial w =
      Polynomial::monomial(ctx, Monomial::variable(ctx->size(), xi, m) * Monomial::variable(ctx->size(), yi, n)) +
      Polynomial::constant(ctx, c);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    if (i == zi) images.push_back(w);
    else if (i == xi || i == yi) images.push_back(Polynomial::variable(ctx, i));
    else images.push_back(Polynomial(ctx));
  }
  const PolyMap specialize(ctx, std::move(images));
  Polynomial us = substitute(pair.u, specialize), vs = substitute(pair.v, specialize);
  Polynomial composed = substitute(p, PolyMap(p.context(), {us, vs}));
  const auto degree = composed.total_degree().value_or(-1);
  const std::vector<Polynomial> spec{us, vs};
  const bool independent = !algebraically_dependent(spec);
  const auto twice = 2 * bound;
  return BlowupReport{w,
                      std::move(us),
                      std::move(vs),
                      std::move(composed),
                      degree,
                      degree > bound,
                      static_cast<std::int64_t>(m) > twice && static_cast<std::int64_t>(n) > twice,
                      independent};
}

Case2Report case2_z_dependence_check(const Polynomial& p, const Polynomial& u, const Polynomial& v,
                                     std::string_view z) {
  if (p.vars().size() != 2) throw PreconditionError("p must be a two-variable polynomial");
  if (p.is_constant()) throw PreconditionError("p must be nonconstant");
  require_same_context(u.context(), v.context(), "case 2 check");
  const auto zi = u.vars().index_of(z);
  if (u.depends_on(zi)) throw PreconditionError("u must not depend on " + std::string(z));
  if (!v.depends_on(zi)) throw PreconditionError("v must depend on " + std::string(z));

  Polynomial composed = substitute(p, PolyMap(p.context(), {u, v}));
  const auto actual = composed.degree(zi).value_or(-1);
  // Highest power of the second variable first, then of the first.
  const MonomialOrder y_first(MonomialOrder::Kind::Lex, {1, 0});
  Monomial lead = p.leading_monomial(y_first);
  const auto predicted = static_cast<std::int64_t>(lead[1]) * v.degree(zi).value();
  const bool applies = lead[1] > 0 && !u.is_constant();
  return Case2Report{std::move(composed), actual, predicted, std::move(lead), actual > 0, applies,
                     actual == predicted};
}

}  // namespace polyaut
