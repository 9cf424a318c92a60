#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polyaut/polynomial.hpp"

namespace polyaut {

struct RandomPolySpec {
  unsigned max_degree = 3;
  unsigned max_terms = 4;
  int coeff_bound = 3;
  /// Variables allowed to appear; empty means all.
  std::vector<std::size_t> vars{};
  /// Upper bound on the exponent of one chosen variable, if set.
  std::optional<std::size_t> capped_var{};
  unsigned capped_degree = 0;
};

/// Seeded generator of small random polynomials and tame automorphisms for
/// property checks. Output depends only on the seed and the call sequence.
class RandomPolynomials {
 public:
  explicit RandomPolynomials(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  Rational nonzero_coefficient(int bound);
  Monomial monomial(std::size_t nvars, const RandomPolySpec& spec);
  /// May return zero when all drawn terms cancel.
  Polynomial polynomial(const ContextPtr& ctx, const RandomPolySpec& spec);
  Polynomial nonconstant(const ContextPtr& ctx, const RandomPolySpec& spec);

  /// Composition of `steps` random moves, each either an elementary map
  /// v -> v + c * (monomial in the other variables, degree <= max_degree) or an
  /// invertible shear v -> v + c * w (+ constant).
  PolyMap tame_automorphism(const ContextPtr& ctx, unsigned steps, unsigned max_degree);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace polyaut
