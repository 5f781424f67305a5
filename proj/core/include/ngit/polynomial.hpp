#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ngit/monomial.hpp"
#include "ngit/ordering.hpp"
#include "ngit/rational.hpp"
#include "ngit/ring.hpp"

namespace ngit {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept sorted in strictly descending grevlex order with no zero coefficients
// and no repeated monomials, so iteration order and serialization are
// deterministic.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Rational c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial term(RingPtr ring, Monomial m, Rational c);
  // Sorts and merges; accepts terms in any order.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::size_t arity() const { return ring_ ? ring_->size() : 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].mono.is_unit(); }
  // Value of a constant polynomial (zero included); throws otherwise.
  Rational constant_value() const;

  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Leading term in grevlex ordering; requires a nonzero polynomial.
  const Term& leading_term() const;
  Term leading_term(const MonomialOrder& ord) const;

  Rational coefficient(const Monomial& m) const;

  std::uint64_t total_degree() const;  // zero polynomial has degree 0
  std::uint64_t weighted_degree(std::span<const std::uint64_t> weights) const;
  bool is_homogeneous(std::span<const std::uint64_t> weights) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator*(const Rational& c) const;
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
  Polynomial pow(std::uint32_t e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Ring homomorphism determined by variable images: variable i is replaced
  // by images[i], which must all live in the target ring.
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

  // Transports the polynomial to another ring. var_map[i] is the target index
  // of variable i, or -1 if the variable must not occur (throws when it does).
  Polynomial map_ring(const RingPtr& target, const std::vector<int>& var_map) const;

  // content * primitive(): content is a rational, the primitive part has
  // integer coefficients with gcd one and positive grevlex-leading
  // coefficient. The zero polynomial has content 0 and primitive part 0.
  std::pair<Rational, Polynomial> primitive_decomposition() const;
  Polynomial primitive_part() const { return primitive_decomposition().second; }
  Polynomial monic(const MonomialOrder& ord) const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

  // Deterministic total order (term-by-term: monomial grevlex, then
  // coefficient); used only to sort polynomial lists canonically.
  static int cmp(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();  // sort, merge, drop zeros

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<Polynomial> try_divide_exact(const Polynomial& f, const Polynomial& g);

void require_same_ring(const Polynomial& a, const Polynomial& b);

// Parses an expression built from variable names of `ring`, rational literals
// ("7", "-3/2"), "+", "-", "*", "^" with nonnegative integer exponents, and
// parentheses.  Accepts everything Polynomial::str() produces.  Throws
// std::invalid_argument on malformed input or unknown names.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace ngit
