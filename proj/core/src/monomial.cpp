#include "polyaut/monomial.hpp"

#include <algorithm>
#include <limits>

#include "polyaut/errors.hpp"

namespace polyaut {

Exponent checked_exponent(std::uint64_t value) {
  if (value > std::numeric_limits<Exponent>::max())
    throw ArithmeticOverflow("monomial exponent overflow (" + std::to_string(value) + ")");
  return static_cast<Exponent>(value);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, Exponent e) {
  Monomial m(nvars);
  m.exps_.at(var) = e;
  return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) out.push_back(i);
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} + other.exps_[i]);
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] - divisor.exps_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::pow(std::uint64_t k) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && k > std::numeric_limits<Exponent>::max() / exps_[i])
      throw ArithmeticOverflow("monomial exponent overflow in power");
    out.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} * k);
  }
  return out;
}

std::size_t hash_value(const Monomial& m) noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace polyaut
