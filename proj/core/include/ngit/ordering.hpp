#pragma once

#include <cstddef>
#include <vector>

#include "ngit/monomial.hpp"

namespace ngit {

// Total order on monomials of a fixed arity. Three kinds are provided:
//
//   grevlex      degree first, ties by smallest exponent in the last
//                distinguishing variable (the default order everywhere)
//   lex          left-to-right exponent comparison
//   elimination  two-block order: total degree in a designated leading block
//                dominates, with grevlex inside each block; any monomial
//                touching the leading block ranks above every monomial that
//                does not, so leading-block variables can be eliminated
class MonomialOrder {
 public:
  static MonomialOrder grevlex();
  static MonomialOrder lex();
  static MonomialOrder elimination(std::size_t arity, const std::vector<std::size_t>& leading_block);

  // +1 if a ranks above b, -1 below, 0 equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool has_leading_block() const { return kind_ == Kind::Block; }
  const std::vector<char>& leading_mask() const { return mask_; }

 private:
  enum class Kind { Grevlex, Lex, Block };
  MonomialOrder(Kind kind, std::vector<char> mask) : kind_(kind), mask_(std::move(mask)) {}

  Kind kind_;
  std::vector<char> mask_;  // Block only: nonzero entries mark the leading block
};

}  // namespace ngit
