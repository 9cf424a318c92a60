#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace polyaut {

using Exponent = std::uint32_t;

/// Exponent vector, one entry per context variable. All arithmetic is
/// overflow checked and throws ArithmeticOverflow instead of wrapping.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}
  explicit Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {}

  static Monomial variable(std::size_t nvars, std::size_t var, Exponent e = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, Exponent e) { exps_[i] = e; }
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), exps_.size()}; }

  std::uint64_t total_degree() const noexcept;
  bool is_unit() const noexcept;
  /// True when every exponent of *this is <= the matching one of other.
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  /// Variables with a positive exponent.
  std::vector<std::size_t> support() const;

  Monomial operator*(const Monomial& other) const;
  /// Pre: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial pow(std::uint64_t k) const;

  /// Plain lexicographic comparison of exponent vectors; used for containers
  /// only, never as a term order.
  auto operator<=>(const Monomial& other) const noexcept {
    return std::lexicographical_compare_three_way(exps_.begin(), exps_.end(), other.exps_.begin(),
                                                  other.exps_.end());
  }
  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

 private:
  boost::container::small_vector<Exponent, 6> exps_;
};

std::size_t hash_value(const Monomial& m) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return hash_value(m); }
};

Exponent checked_exponent(std::uint64_t value);

}  // namespace polyaut
