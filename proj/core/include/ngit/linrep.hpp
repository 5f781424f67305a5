#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ngit/polynomial.hpp"

namespace ngit {

// All monomials of one weighted degree, listed in descending graded order
// (the same order polynomial terms are stored in), which groups higher
// standard-degree monomials first and matches the documented basis listings.
struct GradedMonomialBasis {
  RingPtr ring;
  std::vector<std::uint64_t> weights;
  std::uint64_t degree = 0;
  std::vector<Monomial> monomials;
};

GradedMonomialBasis monomial_basis(const RingPtr& ring, std::vector<std::uint64_t> weights,
                                   std::uint64_t degree);

// Polynomial substitution x_i -> image_i whose coefficients may involve
// formal parameters. Images live in the combined ring (geometric variables
// first, then parameters); a variable of weight w must map to a
// weighted-homogeneous polynomial of weight w in the geometric variables.
class SubstitutionAutomorphism {
 public:
  SubstitutionAutomorphism(RingPtr vars, RingPtr params, std::vector<Polynomial> images);

  const RingPtr& var_ring() const { return vars_; }
  const RingPtr& param_ring() const { return params_; }
  const RingPtr& combined_ring() const { return combined_; }
  const std::vector<Polynomial>& images() const { return images_; }

  // Identity substitution with the given parameter ring.
  static SubstitutionAutomorphism identity(RingPtr vars, RingPtr params);

  // (s o t)(x) = s(t(x)): applies s to every image of t. Both substitutions
  // must share their variable and parameter rings.
  friend SubstitutionAutomorphism compose(const SubstitutionAutomorphism& s,
                                          const SubstitutionAutomorphism& t);

  // Image of an arbitrary polynomial in the variables (parameters pass
  // through untouched); f may live in the variable ring or the combined ring.
  Polynomial apply(const Polynomial& f) const;

 private:
  RingPtr vars_, params_, combined_;
  std::vector<Polynomial> images_;
};

// Square matrix of parameter polynomials.
struct ParamMatrix {
  RingPtr param_ring;
  std::vector<std::vector<Polynomial>> entries;  // entries[row][col]

  std::size_t size() const { return entries.size(); }
  bool is_identity() const;

  friend bool operator==(const ParamMatrix& a, const ParamMatrix& b) {
    return a.entries == b.entries;
  }
  friend bool operator!=(const ParamMatrix& a, const ParamMatrix& b) { return !(a == b); }
};

ParamMatrix operator*(const ParamMatrix& a, const ParamMatrix& b);

// Fraction-free determinant (Bareiss); exact over the parameter ring.
Polynomial determinant(const ParamMatrix& m);

// Column j holds the coefficients, in basis order, of the image of basis
// monomial j. Throws when an image leaves the span of the basis.
ParamMatrix substitution_matrix(const SubstitutionAutomorphism& s, const GradedMonomialBasis& b);

// Composition rule on parameters for a parameter-indexed family: entry k is
// the parameter polynomial, over two disjoint copies of the parameter ring
// (first copy suffixed "'", second "''", in that variable order), giving the
// k-th parameter of the composite. additive_rule gives p_k' + p_k''.
std::vector<Polynomial> additive_rule(const RingPtr& params, const RingPtr& doubled);

// Builds the doubled parameter ring for a rule: first-copy names then
// second-copy names.
RingPtr doubled_param_ring(const RingPtr& params);

// True iff the family satisfies the one-parameter group law on the basis:
// the matrix at parameters zero is the identity, and the product of the
// matrices at two independent parameter copies equals the matrix at the
// rule-composed parameters, identically as parameter polynomials. An empty
// rule means the additive rule.
bool group_law_check(const SubstitutionAutomorphism& family, const GradedMonomialBasis& basis,
                     const std::vector<Polynomial>& rule = {});

}  // namespace ngit
