#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ngit {

// Formal power series with integer coefficients, exact through a stated
// truncation order. Operations never invent information past the truncation:
// combining series of different orders truncates to the smaller one.
class TruncatedIntegerSeries {
 public:
  explicit TruncatedIntegerSeries(std::size_t trunc) : coeffs_(trunc + 1, 0) {}
  static TruncatedIntegerSeries from_coeffs(std::size_t trunc, std::vector<long long> coeffs);
  static TruncatedIntegerSeries monomial(std::size_t trunc, std::size_t k, long long c = 1);

  std::size_t trunc() const { return coeffs_.size() - 1; }
  long long coeff(std::size_t i) const;  // throws past the truncation order
  const std::vector<long long>& coeffs() const { return coeffs_; }

  // Largest exponent with nonzero coefficient, or -1 for the zero series.
  long long degree() const;

  TruncatedIntegerSeries operator+(const TruncatedIntegerSeries& o) const;
  TruncatedIntegerSeries operator-(const TruncatedIntegerSeries& o) const;
  TruncatedIntegerSeries operator*(const TruncatedIntegerSeries& o) const;
  TruncatedIntegerSeries operator*(long long c) const;

  // Multiplication by t^k (coefficients shift up; the top k drop off).
  TruncatedIntegerSeries shift(std::size_t k) const;

  // Multiplication by the geometric expansion of 1/(1 - t^k), k >= 1.
  TruncatedIntegerSeries geometric(std::size_t k) const;

  // Restriction to degree <= new_trunc (never extends).
  TruncatedIntegerSeries truncated(std::size_t new_trunc) const;

  bool agrees_through(const TruncatedIntegerSeries& o, std::size_t degree) const;

  friend bool operator==(const TruncatedIntegerSeries& a, const TruncatedIntegerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncatedIntegerSeries& a, const TruncatedIntegerSeries& b) {
    return !(a == b);
  }

  std::string str() const;  // e.g. "1 + t^2 + 2*t^4"

 private:
  std::vector<long long> coeffs_;
};

// One unstable stratum of the semistable-locus subtraction formula: the
// series of the open locus is the ambient series minus t^(2 codim) times each
// stratum factor.
struct Stratum {
  std::string label;
  unsigned codimension = 0;
  TruncatedIntegerSeries factor{0};
};

std::size_t default_truncation(unsigned n);  // 2n + 4

// Unstable strata for the degree-n configuration problem; factors carry the
// given truncation order.
std::vector<Stratum> semistable_strata(unsigned n, std::size_t trunc);

// Equivariant series of the semistable locus via the stratification
// subtraction formula. trunc = 0 selects the default truncation; explicit
// values must be at least 2n.
TruncatedIntegerSeries equivariant_series_yss(unsigned n, std::size_t trunc = 0);

// Betti series of the quotient for odd n >= 3: coefficient of t^(2j) is
// 1 + floor(min(j, n-1-j)/2) for 0 <= j <= n-1.
TruncatedIntegerSeries poincare_quotient_odd(unsigned n);

// Betti series of the partial desingularization of the quotient, even n >= 4.
TruncatedIntegerSeries poincare_partial_desing(unsigned n, std::size_t trunc = 0);

// Intersection Betti series of the quotient, even n >= 4.
TruncatedIntegerSeries intersection_poincare(unsigned n);

// Betti series of the stable-locus quotient: 1 + t^2 + ... + t^(n-1) for odd
// n, ... + t^(n-2) for even n. Requires n >= 2.
TruncatedIntegerSeries poincare_stable_quotient(unsigned n);

// Betti series of the reductive quotient of the ambient projective space,
// odd n >= 3.
TruncatedIntegerSeries poincare_binary_quotient(unsigned n, std::size_t trunc = 0);

}  // namespace ngit
