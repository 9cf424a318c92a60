#include "polyaut/groebner.hpp"

#include <algorithm>
#include <set>

#include "polyaut/errors.hpp"

namespace polyaut {

namespace {

/// Terms sorted increasingly by the active order; the leading term is back().
using OrderedPoly = std::vector<Term>;

class Engine {
 public:
  Engine(const ContextPtr& ctx, const MonomialOrder& order) : ctx_(ctx), order_(order) {}

  OrderedPoly convert(const Polynomial& p) const {
    OrderedPoly out(p.terms().begin(), p.terms().end());
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return less(a.monomial, b.monomial); });
    return out;
  }

  Polynomial convert(const OrderedPoly& p) const { return Polynomial::from_terms(ctx_, p); }

  bool less(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b) == std::strong_ordering::less;
  }

  /// f - c * m * g, both increasing.
  OrderedPoly sub_mul(const OrderedPoly& f, const Rational& c, const Monomial& m, const OrderedPoly& g) const {
    OrderedPoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    Monomial shifted;
    bool have_shifted = false;
    while (i < f.size() || j < g.size()) {
      if (j < g.size() && !have_shifted) {
        shifted = g[j].monomial * m;
        have_shifted = true;
      }
      if (j == g.size() || (i < f.size() && less(f[i].monomial, shifted))) {
        out.push_back(f[i++]);
      } else if (i == f.size() || less(shifted, f[i].monomial)) {
        out.push_back(Term{shifted, -c * g[j].coeff});
        ++j;
        have_shifted = false;
      } else {
        Rational v = f[i].coeff - c * g[j].coeff;
        if (v != 0) out.push_back(Term{f[i].monomial, std::move(v)});
        ++i;
        ++j;
        have_shifted = false;
      }
    }
    return out;
  }

  /// Full reduction modulo the listed (monic) divisors.
  OrderedPoly reduce(OrderedPoly f, const std::vector<const OrderedPoly*>& divisors) const {
    OrderedPoly remainder;
    while (!f.empty()) {
      const Term& lead = f.back();
      const OrderedPoly* hit = nullptr;
      for (const auto* g : divisors)
        if (g->back().monomial.divides(lead.monomial)) {
          hit = g;
          break;
        }
      if (!hit) {
        remainder.push_back(lead);
        f.pop_back();
        continue;
      }
      const Rational c = lead.coeff / hit->back().coeff;
      const Monomial q = lead.monomial / hit->back().monomial;
      f = sub_mul(f, c, q, *hit);
    }
    std::reverse(remainder.begin(), remainder.end());
    return remainder;
  }

  static void make_monic(OrderedPoly& p) {
    if (p.empty() || p.back().coeff == 1) return;
    const Rational inv = 1 / p.back().coeff;
    for (auto& t : p) t.coeff *= inv;
  }

  OrderedPoly s_polynomial(const OrderedPoly& a, const OrderedPoly& b) const {
    const Monomial l = a.back().monomial.lcm(b.back().monomial);
    OrderedPoly left;
    const Monomial ma = l / a.back().monomial;
    const Rational ca = 1 / a.back().coeff;
    left.reserve(a.size());
    for (const auto& t : a) left.push_back(Term{t.monomial * ma, t.coeff * ca});
    return sub_mul(left, 1 / b.back().coeff, l / b.back().monomial, b);
  }

 private:
  const ContextPtr& ctx_;
  const MonomialOrder& order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
};

}  // namespace

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> generators, MonomialOrder order)
    : ctx_(std::move(ctx)), order_(std::move(order)) {
  if (order_.size() != ctx_->size()) throw PreconditionError("monomial order does not match context");
  for (auto& g : generators) {
    require_same_context(ctx_, g.context(), "ideal generators");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

namespace {

ContextPtr context_of(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw PreconditionError("ideal needs a context; pass it explicitly");
  return generators.front().context();
}

}  // namespace

Ideal::Ideal(std::vector<Polynomial> generators, MonomialOrder order) : Ideal(context_of(generators), {}, order) {
  *this = Ideal(ctx_, std::move(generators), std::move(order));
}

GroebnerBasis::GroebnerBasis(ContextPtr ctx, MonomialOrder order, std::vector<Polynomial> elements,
                             GroebnerStats stats)
    : ctx_(std::move(ctx)), order_(std::move(order)), elements_(std::move(elements)), stats_(stats) {
  for (const auto& e : elements_) leading_.push_back(e.leading_monomial(order_));
}

bool GroebnerBasis::is_unit() const noexcept { return elements_.size() == 1 && elements_.front().is_one(); }

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerLimits& limits) {
  const auto& ctx = ideal.context();
  const auto& order = ideal.order();
  Engine engine(ctx, order);
  GroebnerStats stats;

  std::vector<OrderedPoly> basis;
  std::vector<std::uint64_t> sugar;

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    auto c = order.compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto unit_basis = [&] {
    return GroebnerBasis(ctx, order, {Polynomial::constant(ctx, 1)}, stats);
  };
  auto divisors = [&] {
    std::vector<const OrderedPoly*> out;
    for (const auto& b : basis) out.push_back(&b);
    return out;
  };
  auto add = [&](OrderedPoly h, std::uint64_t h_sugar) {
    Engine::make_monic(h);
    const std::size_t n = basis.size();
    for (std::size_t k = 0; k < n; ++k) {
      Monomial l = basis[k].back().monomial.lcm(h.back().monomial);
      const auto s = std::max(sugar[k] + (l.total_degree() - basis[k].back().monomial.total_degree()),
                              h_sugar + (l.total_degree() - h.back().monomial.total_degree()));
      queue.insert(Pair{k, n, std::move(l), s});
      pending.emplace(k, n);
    }
    basis.push_back(std::move(h));
    sugar.push_back(h_sugar);
  };

  for (const auto& g : ideal.generators()) {
    OrderedPoly h = engine.reduce(engine.convert(g), divisors());
    if (h.empty()) continue;
    if (h.size() == 1 && h.back().monomial.is_unit()) return unit_basis();
    add(std::move(h), static_cast<std::uint64_t>(g.total_degree().value()));
  }

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) != 0;
  };

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    const auto& lm_i = basis[pr.i].back().monomial;
    const auto& lm_j = basis[pr.j].back().monomial;
    if (lm_i.coprime(lm_j)) {
      ++stats.skipped_coprime;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      chain = basis[k].back().monomial.divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k);
    }
    if (chain) {
      ++stats.skipped_chain;
      continue;
    }
    if (stats.pairs_reduced >= limits.max_pairs)
      throw ResourceLimitExceeded("groebner watchdog: more than " + std::to_string(limits.max_pairs) +
                                  " S-pairs");
    if (pr.lcm.total_degree() > limits.max_degree)
      throw ResourceLimitExceeded("groebner watchdog: working degree " + std::to_string(pr.lcm.total_degree()) +
                                  " exceeds " + std::to_string(limits.max_degree));
    ++stats.pairs_reduced;
    OrderedPoly h = engine.reduce(engine.s_polynomial(basis[pr.i], basis[pr.j]), divisors());
    if (h.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    if (h.size() == 1 && h.back().monomial.is_unit()) return unit_basis();
    add(std::move(h), pr.sugar);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].back().monomial;
      const auto& lj = basis[j].back().monomial;
      redundant = lj.divides(li) && (lj != li || j < i);
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<OrderedPoly> minimal;
  for (auto i : keep) minimal.push_back(basis[i]);
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const OrderedPoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    minimal[i] = engine.reduce(minimal[i], others);
    Engine::make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const OrderedPoly& a, const OrderedPoly& b) { return engine.less(a.back().monomial, b.back().monomial); });
  std::vector<Polynomial> elements;
  for (const auto& p : minimal) elements.push_back(engine.convert(p));
  return GroebnerBasis(ctx, order, std::move(elements), stats);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  require_same_context(f.context(), g.context(), "normal form");
  Engine engine(g.context(), g.order());
  std::vector<OrderedPoly> converted;
  for (const auto& e : g.elements()) converted.push_back(engine.convert(e));
  std::vector<const OrderedPoly*> divisors;
  for (const auto& c : converted) divisors.push_back(&c);
  return engine.convert(engine.reduce(engine.convert(f), divisors));
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& g) { return normal_form(f, g).is_zero(); }

bool is_variety_empty(const GroebnerBasis& g) { return g.is_unit(); }

int ideal_dimension(const GroebnerBasis& g) {
  if (g.is_unit()) return -1;
  const auto n = g.context()->size();
  if (n > 24) throw PreconditionError("ideal dimension supports at most 24 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& lm : g.leading_monomials()) {
    std::uint32_t mask = 0;
    for (auto v : lm.support()) mask |= 1u << v;
    supports.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    const int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [set](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& g) {
  Engine engine(g.context(), g.order());
  std::vector<OrderedPoly> converted;
  for (const auto& e : g.elements()) converted.push_back(engine.convert(e));
  std::vector<const OrderedPoly*> divisors;
  for (const auto& c : converted) divisors.push_back(&c);
  for (std::size_t i = 0; i < converted.size(); ++i)
    for (std::size_t j = i + 1; j < converted.size(); ++j)
      if (!engine.reduce(engine.s_polynomial(converted[i], converted[j]), divisors).empty()) return false;
  return true;
}

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
  require_same_context(a.context(), b.context(), "ideal comparison");
  for (const auto& e : a.elements())
    if (!ideal_membership(e, b)) return false;
  for (const auto& e : b.elements())
    if (!ideal_membership(e, a)) return false;
  return true;
}

}  // namespace polyaut
