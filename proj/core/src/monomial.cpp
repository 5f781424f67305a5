#include "ngit/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ngit {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::unit(std::size_t arity) {
  return Monomial(std::vector<std::uint32_t>(arity, 0));
}

Monomial Monomial::variable(std::size_t arity, std::size_t i, std::uint32_t e) {
  std::vector<std::uint32_t> exps(arity, 0);
  exps.at(i) = e;
  return Monomial(std::move(exps));
}

std::uint64_t Monomial::weighted_degree(std::span<const std::uint64_t> weights) const {
  if (weights.size() != exps_.size())
    throw std::invalid_argument("Monomial: weight vector arity mismatch");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += weights[i] * exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  if (arity() != m.arity()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > m.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& m) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && m.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& m) const {
  std::vector<std::uint32_t> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (m.exps_[i] > exps_[i]) throw std::invalid_argument("Monomial: quotient not exact");
    exps[i] = exps_[i] - m.exps_[i];
  }
  return Monomial(std::move(exps));
}

Monomial Monomial::operator*(const Monomial& m) const {
  if (arity() != m.arity()) throw std::invalid_argument("Monomial: arity mismatch");
  std::vector<std::uint32_t> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] + m.exps_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> exps(a.exps_.size());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(exps));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> exps(a.exps_.size());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(exps));
}

}  // namespace ngit
