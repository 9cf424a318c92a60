#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyaut/polynomial.hpp"

namespace polyaut {

/// Rectangular matrix of polynomials over one context.
class PolyMatrix {
 public:
  PolyMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> row_major);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const ContextPtr& context() const noexcept { return ctx_; }

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  void set(std::size_t r, std::size_t c, Polynomial value);

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const;

  PolyMatrix permuted(std::span<const std::size_t> row_perm, std::span<const std::size_t> col_perm) const;
  PolyMatrix map_entries(const PolyMap& m) const;

 private:
  ContextPtr ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Entry (i, j) is d fs[i] / d vars[j].
PolyMatrix jacobian_matrix(std::span<const Polynomial> fs, std::span<const std::size_t> vars);
PolyMatrix jacobian_matrix(std::span<const Polynomial> fs, std::span<const std::string> var_names);
/// Differentiates with respect to every context variable, in context order.
PolyMatrix jacobian_matrix(std::span<const Polynomial> fs);

/// Exact Laplace expansion; pre: square.
Polynomial determinant(const PolyMatrix& m);

struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Polynomial value;
};

/// First nonvanishing k x k minor in lexicographic (rows, cols) order.
/// Throws PreconditionError unless 1 <= k <= min(rows, cols).
std::optional<MinorWitness> first_nonzero_minor(const PolyMatrix& m, std::size_t k);
bool minors_vanish(const PolyMatrix& m, std::size_t k);

struct DependenceVerdict {
  bool dependent;
  /// Set when independent: a nonzero maximal minor of the Jacobian.
  std::optional<MinorWitness> witness;
};

/// Jacobian criterion over all context variables: fs is algebraically
/// dependent iff every |fs| x |fs| minor of the Jacobian vanishes. (Valid
/// in characteristic zero, which the rational coefficients guarantee.)
DependenceVerdict dependence_test(std::span<const Polynomial> fs);
bool algebraically_dependent(std::span<const Polynomial> fs);

/// The 3 x 2 Jacobian of (x, y, x^m y^n + c) with respect to (x, y).
PolyMatrix specialization_factor(const ContextPtr& ctx, std::size_t x, std::size_t y, unsigned m,
                                 unsigned n);

/// Checks the exact identity
///   D(u(x,y,s), v(x,y,s)) = D(u,v)|_{z=s} * specialization_factor
/// with s = x^m y^n + c, where D(u,v) is the Jacobian in (x, y, z).
bool specialization_factorization_holds(const Polynomial& u, const Polynomial& v, unsigned m, unsigned n,
                                        const Rational& c, std::string_view x = "x",
                                        std::string_view y = "y", std::string_view z = "z");

/// Substitutes z -> x^m y^n + c (other variables fixed).
Polynomial specialize_z(const Polynomial& p, unsigned m, unsigned n, const Rational& c,
                        std::string_view x = "x", std::string_view y = "y", std::string_view z = "z");

struct GoodConstantSearch {
  Rational constant;
  std::size_t candidates_tried;
  Polynomial u_specialized;
  Polynomial v_specialized;
  MinorWitness witness;
};

/// Smallest c in 0, 1, ..., cap for which u and v with z -> x^m y^n + c stay
/// algebraically independent. u, v must be independent and involve only
/// x, y, z. Throws ResourceLimitExceeded when the cap is exhausted (a good
/// constant always exists over an infinite field, so this only means the
/// cap was too small).
GoodConstantSearch find_good_constant(const Polynomial& u, const Polynomial& v, unsigned m, unsigned n,
                                      unsigned cap, std::string_view x = "x", std::string_view y = "y",
                                      std::string_view z = "z");

}  // namespace polyaut
