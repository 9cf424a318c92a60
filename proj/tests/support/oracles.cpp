#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace polyaut::testing {

void DenseBivariate::normalize() {
  degree = -1;
  for (int i = 0; i < kMax; ++i)
    for (int j = 0; j < kMax; ++j)
      if (coeff[i][j] != 0) degree = std::max(degree, i + j);
}

DenseBivariate DenseBivariate::operator*(const DenseBivariate& o) const {
  DenseBivariate out;
  if (is_zero() || o.is_zero()) return out;
  for (int i = 0; i < kMax; ++i)
    for (int j = 0; i + j <= degree && j < kMax; ++j) {
      if (coeff[i][j] == 0) continue;
      for (int k = 0; k < kMax; ++k)
        for (int l = 0; k + l <= o.degree && l < kMax; ++l) {
          if (o.coeff[k][l] == 0) continue;
          out.coeff.at(static_cast<std::size_t>(i + k)).at(static_cast<std::size_t>(j + l)) += coeff[i][j] * o.coeff[k][l];
        }
    }
  out.normalize();
  return out;
}

std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      mpq_class factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

constexpr std::uint64_t kPrime = 2147483647ull;

std::uint64_t mod_of(const mpz_class& v) {
  mpz_class r = v % static_cast<unsigned long>(kPrime);
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return r.get_ui();
}

std::uint64_t eval_mod(const DenseBivariate& p, std::uint64_t x, std::uint64_t y) {
  std::uint64_t acc = 0;
  std::uint64_t xi = 1;
  for (int i = 0; i <= p.degree; ++i) {
    std::uint64_t term = xi;
    for (int j = 0; i + j <= p.degree; ++j) {
      if (p.coeff[i][j] != 0) acc = (acc + mod_of(p.coeff[i][j]) * term) % kPrime;
      term = term * y % kPrime;
    }
    xi = xi * x % kPrime;
  }
  return acc;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a * b;
  x = (x & kPrime) + (x >> 31);
  x = (x & kPrime) + (x >> 31);
  return x >= kPrime ? x - kPrime : x;
}

constexpr std::size_t kLanes = 16;

std::size_t padded(std::size_t n) { return (n + kLanes - 1) / kLanes * kLanes; }

/// True iff the n x n matrix stored row-major with row stride padded(n) is
/// invertible mod p. Padding columns must be zero.
bool invertible_mod(std::vector<std::uint32_t>& m, std::size_t n) {
  const std::size_t stride = padded(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot * stride + c] == 0) ++pivot;
    if (pivot == n) return false;
    std::uint32_t* __restrict top = &m[c * stride];
    if (pivot != c) std::swap_ranges(top, top + stride, &m[pivot * stride]);
    const std::uint64_t piv = top[c];
    // Columns left of c are already zero in the rows below, so the update can
    // start at an aligned column.
    const std::size_t from = c / kLanes * kLanes;
    for (std::size_t r = c + 1; r < n; ++r) {
      std::uint32_t* __restrict row = &m[r * stride];
      const std::uint64_t neg = kPrime - row[c];
      if (neg == kPrime) continue;
      // row <- piv * row - row[c] * top keeps the rank and needs no inverse.
      for (std::size_t k = from; k < stride; ++k) {
        std::uint64_t a = piv * row[k];
        a = (a & kPrime) + (a >> 31);
        std::uint64_t b = neg * top[k];
        b = (b & kPrime) + (b >> 31);
        a += b;
        a = (a & kPrime) + (a >> 31);
        a = (a & kPrime) + (a >> 31);
        row[k] = static_cast<std::uint32_t>(a >= kPrime ? a - kPrime : a);
      }
    }
  }
  return true;
}

}  // namespace

AnnihilatorOracle::AnnihilatorOracle(int max_degree, std::uint64_t seed) : max_degree_(max_degree) {
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b) exps_.emplace_back(a, b);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coord(1, kPrime - 1);
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    const std::uint64_t x = coord(rng);
    points_.emplace_back(x, coord(rng));
  }
}

std::vector<std::uint64_t> AnnihilatorOracle::sketch(const DenseBivariate& f) const {
  const auto width = static_cast<std::size_t>(max_degree_) + 1;
  std::vector<std::uint64_t> out(points_.size() * width);
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const std::uint64_t v = eval_mod(f, points_[k].first, points_[k].second);
    out[k * width] = 1;
    for (std::size_t a = 1; a < width; ++a) out[k * width + a] = mul_mod(out[k * width + a - 1], v);
  }
  return out;
}

bool AnnihilatorOracle::independent_mod_p(const std::vector<std::uint64_t>& f,
                                          const std::vector<std::uint64_t>& g) const {
  const auto width = static_cast<std::size_t>(max_degree_) + 1;
  const std::size_t n = exps_.size();
  const std::size_t stride = padded(n);
  std::vector<std::uint32_t> matrix(n * stride);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t* fk = &f[k * width];
    const std::uint64_t* gk = &g[k * width];
    for (std::size_t c = 0; c < n; ++c)
      matrix[k * stride + c] = static_cast<std::uint32_t>(
          mul_mod(fk[static_cast<std::size_t>(exps_[c].first)], gk[static_cast<std::size_t>(exps_[c].second)]));
  }
  return invertible_mod(matrix, n);
}

bool AnnihilatorOracle::exact_exists(const DenseBivariate& f, const DenseBivariate& g) const {
  const auto d = static_cast<std::size_t>(max_degree_);
  std::vector<DenseBivariate> fpow(d + 1), gpow(d + 1);
  fpow[0].coeff[0][0] = 1;
  fpow[0].normalize();
  gpow[0] = fpow[0];
  for (std::size_t i = 1; i <= d; ++i) {
    fpow[i] = fpow[i - 1] * f;
    gpow[i] = gpow[i - 1] * g;
  }
  std::vector<DenseBivariate> columns;
  for (auto [a, b] : exps_) columns.push_back(fpow[static_cast<std::size_t>(a)] * gpow[static_cast<std::size_t>(b)]);
  std::vector<std::vector<mpq_class>> matrix;
  for (int i = 0; i < DenseBivariate::kMax; ++i)
    for (int j = 0; j < DenseBivariate::kMax; ++j) {
      std::vector<mpq_class> row;
      bool any = false;
      for (const auto& c : columns) {
        row.emplace_back(c.coeff[i][j]);
        any = any || c.coeff[i][j] != 0;
      }
      if (any) matrix.push_back(std::move(row));
    }
  return rational_rank(std::move(matrix)) < exps_.size();
}

namespace {

std::vector<std::vector<unsigned>> monomials_up_to(std::size_t nvars, unsigned d) {
  std::vector<std::vector<unsigned>> out{std::vector<unsigned>(nvars, 0)};
  for (unsigned deg = 1; deg <= d; ++deg) {
    // All exponent vectors of total degree `deg`.
    std::vector<unsigned> e(nvars, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
      if (v + 1 == nvars) {
        e[v] = left;
        out.push_back(e);
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        e[v] = k;
        rec(v + 1, left - k);
      }
    };
    if (nvars > 0) rec(0, deg);
  }
  return out;
}

}  // namespace

bool combination_exists(const SparsePoly& f, const std::vector<SparsePoly>& gens, std::size_t nvars, unsigned d) {
  std::map<std::vector<unsigned>, std::size_t> index;
  auto row_of = [&](const std::vector<unsigned>& e) {
    auto [it, inserted] = index.emplace(e, index.size());
    return it->second;
  };
  std::vector<std::map<std::size_t, mpq_class>> columns;
  for (const auto& g : gens)
    for (const auto& m : monomials_up_to(nvars, d)) {
      std::map<std::size_t, mpq_class> col;
      for (const auto& t : g) {
        std::vector<unsigned> e = t.exps;
        for (std::size_t v = 0; v < nvars; ++v) e[v] += m[v];
        col[row_of(e)] += t.coeff;
      }
      columns.push_back(std::move(col));
    }
  std::map<std::size_t, mpq_class> target;
  for (const auto& t : f) target[row_of(t.exps)] += t.coeff;

  auto build = [&](bool with_target) {
    std::vector<std::vector<mpq_class>> rows(index.size(),
                                             std::vector<mpq_class>(columns.size() + (with_target ? 1 : 0)));
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (const auto& [r, v] : columns[c]) rows[r][c] = v;
    if (with_target)
      for (const auto& [r, v] : target) rows[r][columns.size()] = v;
    return rows;
  };
  return rational_rank(build(false)) == rational_rank(build(true));
}

}  // namespace polyaut::testing
