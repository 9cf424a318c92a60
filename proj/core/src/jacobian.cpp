#include "polyaut/jacobian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "polyaut/errors.hpp"

namespace polyaut {

PolyMatrix::PolyMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ctx_)) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> row_major)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
  if (entries_.size() != rows * cols || entries_.empty())
    throw PreconditionError("matrix entry count does not match its shape");
  ctx_ = entries_.front().context();
  for (const auto& e : entries_) require_same_context(ctx_, e.context(), "matrix entries");
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial value) {
  require_same_context(ctx_, value.context(), "matrix entry");
  entries_.at(r * cols_ + c) = std::move(value);
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix shapes do not compose");
  require_same_context(ctx_, o.ctx_, "matrix product");
  PolyMatrix out(ctx_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Polynomial acc(ctx_);
      for (std::size_t k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
      out.set(i, j, std::move(acc));
    }
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

PolyMatrix PolyMatrix::permuted(std::span<const std::size_t> row_perm,
                                std::span<const std::size_t> col_perm) const {
  PolyMatrix out(ctx_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(row_perm[i], col_perm[j]));
  return out;
}

PolyMatrix PolyMatrix::map_entries(const PolyMap& m) const {
  PolyMatrix out(m.target(), rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, substitute(at(i, j), m));
  return out;
}

PolyMatrix jacobian_matrix(std::span<const Polynomial> fs, std::span<const std::size_t> vars) {
  if (fs.empty()) throw PreconditionError("jacobian of an empty list");
  const auto& ctx = fs.front().context();
  for (const auto& f : fs) require_same_context(ctx, f.context(), "jacobian");
  PolyMatrix out(ctx, fs.size(), vars.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j) out.set(i, j, fs[i].partial(vars[j]));
  return out;
}

PolyMatrix jacobian_matrix(std::span<const Polynomial> fs, std::span<const std::string> var_names) {
  if (fs.empty()) throw PreconditionError("jacobian of an empty list");
  std::vector<std::size_t> vars;
  for (const auto& n : var_names) vars.push_back(fs.front().vars().index_of(n));
  return jacobian_matrix(fs, vars);
}

PolyMatrix jacobian_matrix(std::span<const Polynomial> fs) {
  if (fs.empty()) throw PreconditionError("jacobian of an empty list");
  std::vector<std::size_t> vars(fs.front().vars().size());
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  return jacobian_matrix(fs, vars);
}

namespace {

Polynomial laplace(const PolyMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  const auto k = rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  if (k == 2)
    return m.at(rows[0], cols[0]) * m.at(rows[1], cols[1]) - m.at(rows[0], cols[1]) * m.at(rows[1], cols[0]);
  Polynomial acc(m.context());
  std::vector<std::size_t> sub_cols(k - 1);
  for (std::size_t j = 0; j < k; ++j) {
    const auto& entry = m.at(rows[0], cols[j]);
    if (entry.is_zero()) continue;
    std::size_t w = 0;
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub_cols[w++] = cols[c];
    Polynomial term = entry * laplace(m, rows.subspan(1), sub_cols);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

/// Calls visit(subset) for each k-subset of {0..n-1} in lexicographic order
/// until it returns true.
bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() == 0) return Polynomial::constant(m.context(), 1);
  std::vector<std::size_t> all(m.rows());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return laplace(m, all, all);
}

std::optional<MinorWitness> first_nonzero_minor(const PolyMatrix& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols()))
    throw PreconditionError("minor size " + std::to_string(k) + " out of range for a " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  std::optional<MinorWitness> found;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    return for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
      Polynomial d = laplace(m, rows, cols);
      if (d.is_zero()) return false;
      found = MinorWitness{rows, cols, std::move(d)};
      return true;
    });
  });
  return found;
}

bool minors_vanish(const PolyMatrix& m, std::size_t k) { return !first_nonzero_minor(m, k).has_value(); }

DependenceVerdict dependence_test(std::span<const Polynomial> fs) {
  if (fs.empty()) return {false, std::nullopt};
  const auto nvars = fs.front().vars().size();
  // More functions than variables: the Jacobian rank is at most nvars.
  if (fs.size() > nvars) {
    for (const auto& f : fs) require_same_context(fs.front().context(), f.context(), "dependence test");
    return {true, std::nullopt};
  }
  auto witness = first_nonzero_minor(jacobian_matrix(fs), fs.size());
  return {!witness.has_value(), std::move(witness)};
}

bool algebraically_dependent(std::span<const Polynomial> fs) { return dependence_test(fs).dependent; }

PolyMatrix specialization_factor(const ContextPtr& ctx, std::size_t x, std::size_t y, unsigned m, unsigned n) {
  const auto s = Polynomial::monomial(
      ctx, Monomial::variable(ctx->size(), x, m) * Monomial::variable(ctx->size(), y, n));
  const std::vector<Polynomial> fs{Polynomial::variable(ctx, x), Polynomial::variable(ctx, y), s};
  const std::vector<std::size_t> vars{x, y};
  return jacobian_matrix(fs, vars);
}

Polynomial specialize_z(const Polynomial& p, unsigned m, unsigned n, const Rational& c, std::string_view x,
                        std::string_view y, std::string_view z) {
  const auto& ctx = p.context();
  const auto xi = ctx->index_of(x), yi = ctx->index_of(y), zi = ctx->index_of(z);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ctx->size(); ++i) images.push_back(Polynomial::variable(ctx, i));
  images[zi] = Polynomial::monomial(ctx, Monomial::variable(ctx->size(), xi, m) *
                                             Monomial::variable(ctx->size(), yi, n)) +
               Polynomial::constant(ctx, c);
  return substitute(p, PolyMap(ctx, std::move(images)));
}

bool specialization_factorization_holds(const Polynomial& u, const Polynomial& v, unsigned m, unsigned n,
                                        const Rational& c, std::string_view x, std::string_view y,
                                        std::string_view z) {
  require_same_context(u.context(), v.context(), "factorization check");
  const auto& ctx = u.context();
  const auto xi = ctx->index_of(x), yi = ctx->index_of(y), zi = ctx->index_of(z);
  const std::vector<Polynomial> specialized{specialize_z(u, m, n, c, x, y, z), specialize_z(v, m, n, c, x, y, z)};
  const std::vector<std::size_t> xy{xi, yi}, xyz{xi, yi, zi};
  const PolyMatrix lhs = jacobian_matrix(specialized, xy);

  const std::vector<Polynomial> pair{u, v};
  const PolyMatrix full = jacobian_matrix(pair, xyz);
  PolyMatrix at_s(ctx, 2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) at_s.set(i, j, specialize_z(full.at(i, j), m, n, c, x, y, z));
  return lhs == at_s * specialization_factor(ctx, xi, yi, m, n);
}

GoodConstantSearch find_good_constant(const Polynomial& u, const Polynomial& v, unsigned m, unsigned n,
                                      unsigned cap, std::string_view x, std::string_view y,
                                      std::string_view z) {
  require_same_context(u.context(), v.context(), "good constant search");
  if (m < 1 || n < 1) throw PreconditionError("exponents m and n must be at least 1");
  const auto& ctx = u.context();
  const auto xi = ctx->index_of(x), yi = ctx->index_of(y), zi = ctx->index_of(z);
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    if (i == xi || i == yi || i == zi) continue;
    if (u.depends_on(i) || v.depends_on(i))
      throw PreconditionError("'" + ctx->name(i) + "' must be specialized to 0 before the search");
  }
  const std::vector<Polynomial> pair{u, v};
  if (algebraically_dependent(pair))
    throw PreconditionError("u and v are algebraically dependent; no constant can separate them");
  for (unsigned c = 0; c <= cap; ++c) {
    std::vector<Polynomial> spec{specialize_z(u, m, n, c, x, y, z), specialize_z(v, m, n, c, x, y, z)};
    auto verdict = dependence_test(spec);
    if (!verdict.dependent)
      return GoodConstantSearch{Rational(c), std::size_t{c} + 1, spec[0], spec[1], std::move(*verdict.witness)};
  }
  throw ResourceLimitExceeded("no good constant in 0.." + std::to_string(cap) +
                              "; one exists over any infinite field, raise the cap");
}

}  // namespace polyaut
