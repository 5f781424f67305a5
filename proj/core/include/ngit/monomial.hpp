#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ngit {

// Exponent vector of a power product. The arity is fixed at construction and
// must match the ambient ring everywhere a monomial is used.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial unit(std::size_t arity);
  static Monomial variable(std::size_t arity, std::size_t i, std::uint32_t e = 1);

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const { return degree_; }
  std::uint64_t weighted_degree(std::span<const std::uint64_t> weights) const;

  bool is_unit() const { return degree_ == 0; }
  bool divides(const Monomial& m) const;
  bool coprime(const Monomial& m) const;

  // Requires m.divides(*this).
  Monomial quotient(const Monomial& m) const;

  Monomial operator*(const Monomial& m) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

}  // namespace ngit
