#include "polyaut/polynomial.hpp"

#include <algorithm>
#include <map>

#include "polyaut/errors.hpp"

namespace polyaut {

namespace {

bool canonical_greater(const Term& a, const Term& b) {
  return canonical_compare(a.monomial, b.monomial) == std::strong_ordering::greater;
}

bool is_integer(const Rational& r) { return mpz_cmp_ui(r.get_den_mpz_t(), 1) == 0; }

bool small_integer(const Rational& r) { return is_integer(r) && mpz_fits_slong_p(r.get_num_mpz_t()); }

/// a * b, skipping the gcd normalization when both are integers.
Rational product(const Rational& a, const Rational& b) {
  if (small_integer(a) && small_integer(b)) {
    long r = 0;
    if (!__builtin_mul_overflow(mpz_get_si(a.get_num_mpz_t()), mpz_get_si(b.get_num_mpz_t()), &r)) return Rational(r);
  }
  Rational r;
  if (is_integer(a) && is_integer(b)) mpz_mul(r.get_num_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  else mpq_mul(r.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  return r;
}

void accumulate(Rational& acc, const Rational& x) {
  if (small_integer(acc) && small_integer(x)) {
    long r = 0;
    if (!__builtin_add_overflow(mpz_get_si(acc.get_num_mpz_t()), mpz_get_si(x.get_num_mpz_t()), &r)) {
      mpz_set_si(acc.get_num_mpz_t(), r);
      return;
    }
  }
  if (is_integer(acc) && is_integer(x)) mpz_add(acc.get_num_mpz_t(), acc.get_num_mpz_t(), x.get_num_mpz_t());
  else acc += x;
}

/// Sorts descending, merges equal monomials, drops zeros.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), canonical_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) accumulate(terms[i].coeff, terms[j++].coeff);
    if (sgn(terms[i].coeff) != 0) {
      if (out != i) terms[out] = std::move(terms[i]);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::vector<Term> merge_add(std::span<const Term> a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (i == a.size()) cmp = std::strong_ordering::less;
    else if (j == b.size()) cmp = std::strong_ordering::greater;
    else cmp = canonical_compare(a[i].monomial, b[j].monomial);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back(b[j]);
      if (negate_b) mpq_neg(out.back().coeff.get_mpq_t(), out.back().coeff.get_mpq_t());
      ++j;
    } else {
      Rational c = a[i].coeff;
      if (negate_b) {
        mpq_neg(c.get_mpq_t(), c.get_mpq_t());
        accumulate(c, b[j].coeff);
        mpq_neg(c.get_mpq_t(), c.get_mpq_t());
      } else {
        accumulate(c, b[j].coeff);
      }
      if (sgn(c) != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw PreconditionError("polynomial requires a variable context");
}

Polynomial::Polynomial(ContextPtr ctx, std::vector<Term> canonical_terms)
    : ctx_(std::move(ctx)), terms_(std::move(canonical_terms)) {}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (c != 0) p.terms_.push_back(Term{Monomial(p.ctx_->size()), c});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t var) {
  if (!ctx || var >= ctx->size()) throw PreconditionError("variable index out of range");
  auto n = ctx->size();
  return monomial(std::move(ctx), Monomial::variable(n, var), 1);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::string_view name) {
  auto i = ctx->index_of(name);
  return variable(std::move(ctx), i);
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (m.size() != p.ctx_->size()) throw PreconditionError("monomial length does not match context");
  if (c != 0) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  Polynomial p(std::move(ctx));
  for (const auto& t : terms)
    if (t.monomial.size() != p.ctx_->size())
      throw PreconditionError("monomial length does not match context");
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_unit());
}

bool Polynomial::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].monomial.is_unit() && terms_[0].coeff == 1;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_unit()) return terms_.back().coeff;
  return 0;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return canonical_compare(t.monomial, key) == std::strong_ordering::greater;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  auto terms = terms_;
  for (auto& t : terms) t.coeff = -t.coeff;
  return Polynomial(ctx_, std::move(terms));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_context(ctx_, o.ctx_, "add");
  return Polynomial(ctx_, merge_add(terms_, o.terms_, false));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_context(ctx_, o.ctx_, "subtract");
  return Polynomial(ctx_, merge_add(terms_, o.terms_, true));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_context(ctx_, o.ctx_, "multiply");
  if (terms_.empty() || o.terms_.empty()) return Polynomial(ctx_);
  if (o.terms_.size() == 1) return scaled(o.terms_[0].coeff, o.terms_[0].monomial);
  if (terms_.size() == 1) return o.scaled(terms_[0].coeff, terms_[0].monomial);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.push_back(Term{a.monomial * b.monomial, product(a.coeff, b.coeff)});
  canonicalize(out);
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ctx_);
  auto terms = terms_;
  for (auto& t : terms) t.coeff *= c;
  return Polynomial(ctx_, std::move(terms));
}

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
  if (c == 0) return Polynomial(ctx_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) out.push_back(Term{t.monomial * m, product(t.coeff, c)});
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ctx_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_context(ctx_, o.ctx_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].monomial != o.terms_[i].monomial || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Degree Polynomial::degree(std::size_t var) const {
  if (var >= ctx_->size()) throw PreconditionError("variable index out of range");
  if (terms_.empty()) return Degree::neg_infinity();
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return Degree(d);
}

Degree Polynomial::total_degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  // Canonical order is graded, so the first term has maximal degree.
  return Degree(static_cast<std::int64_t>(terms_.front().monomial.total_degree()));
}

bool Polynomial::depends_on(std::size_t var) const {
  if (var >= ctx_->size()) throw PreconditionError("variable index out of range");
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.monomial[var] != 0; });
}

Polynomial Polynomial::partial(std::size_t var) const {
  if (var >= ctx_->size()) throw PreconditionError("variable index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Dividing by a variable preserves any monomial order, so no merge is needed.
  for (const auto& t : terms_) {
    auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back(Term{std::move(m), product(t.coeff, Rational(static_cast<unsigned long>(e)))});
  }
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::leading_form(std::size_t var) const {
  auto d = degree(var);
  if (d.is_neg_infinity()) return Polynomial(ctx_);
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.monomial[var] == d.value()) out.push_back(t);
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::coefficient_of(std::size_t var, Exponent e) const {
  if (var >= ctx_->size()) throw PreconditionError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial[var] != e) continue;
    Monomial m = t.monomial;
    m.set(var, 0);
    out.push_back(Term{std::move(m), t.coeff});
  }
  canonicalize(out);
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::homogeneous_component(std::uint64_t degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.monomial.total_degree() == degree) out.push_back(t);
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::top_form() const {
  if (terms_.empty()) return Polynomial(ctx_);
  return homogeneous_component(terms_.front().monomial.total_degree());
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
  return leading_term(order).monomial;
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  if (order.size() != ctx_->size()) throw PreconditionError("monomial order does not match context");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

Polynomial Polynomial::rebase(const ContextPtr& target) const {
  if (same_context(ctx_, target)) return Polynomial(target, terms_);
  std::vector<std::optional<std::size_t>> where(ctx_->size());
  for (std::size_t i = 0; i < ctx_->size(); ++i) where[i] = target->find(ctx_->name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!where[i]) throw UnknownVariable(ctx_->name(i));
      m.set(*where[i], t.monomial[i]);
    }
    out.push_back(Term{std::move(m), t.coeff});
  }
  canonicalize(out);
  return Polynomial(target, std::move(out));
}

std::optional<Rational> scalar_ratio(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.size() != b.size()) return std::nullopt;
  if (a.is_zero()) return std::nullopt;
  Rational lambda = a.terms()[0].coeff / b.terms()[0].coeff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.terms()[i].monomial != b.terms()[i].monomial) return std::nullopt;
    if (a.terms()[i].coeff != lambda * b.terms()[i].coeff) return std::nullopt;
  }
  return lambda;
}

PolyMap::PolyMap(ContextPtr source, std::vector<Polynomial> images)
    : source_(std::move(source)), images_(std::move(images)) {
  if (!source_) throw PreconditionError("map requires a source context");
  if (images_.size() != source_->size())
    throw PreconditionError("map must assign exactly one image per source variable");
  if (images_.empty()) {
    target_ = source_;
    return;
  }
  target_ = images_.front().context();
  for (const auto& img : images_) require_same_context(target_, img.context(), "map images");
}

PolyMap PolyMap::identity(const ContextPtr& ctx) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ctx->size(); ++i) images.push_back(Polynomial::variable(ctx, i));
  return PolyMap(ctx, std::move(images));
}

PolyMap PolyMap::then(const PolyMap& next) const {
  require_same_context(target_, next.source_, "compose maps");
  std::vector<Polynomial> images;
  images.reserve(images_.size());
  for (const auto& img : images_) images.push_back(substitute(img, next));
  return PolyMap(source_, std::move(images));
}

bool PolyMap::is_identity() const {
  if (!same_context(source_, target_)) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!(images_[i] == Polynomial::variable(source_, i))) return false;
  return true;
}

bool PolyMap::operator==(const PolyMap& o) const {
  return same_context(source_, o.source_) && same_context(target_, o.target_) && images_ == o.images_;
}

Polynomial substitute(const Polynomial& p, const PolyMap& m) {
  require_same_context(p.context(), m.source(), "substitute");
  const auto& target = m.target();
  const auto nvars = p.vars().size();
  // powers[v][e] = image(v)^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(nvars);
  auto power = [&](std::size_t v, Exponent e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * m.image(v));
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < nvars && !prod.is_zero(); ++v)
      if (t.monomial[v] != 0) prod = prod * power(v, t.monomial[v]);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return Polynomial::from_terms(target, std::move(acc));
}

}  // namespace polyaut
