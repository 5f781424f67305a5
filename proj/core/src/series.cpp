#include "ngit/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngit {

TruncatedIntegerSeries TruncatedIntegerSeries::from_coeffs(std::size_t trunc,
                                                           std::vector<long long> coeffs) {
  if (coeffs.size() > trunc + 1)
    throw std::invalid_argument("series: more coefficients than the truncation order admits");
  coeffs.resize(trunc + 1, 0);
  TruncatedIntegerSeries s(trunc);
  s.coeffs_ = std::move(coeffs);
  return s;
}

TruncatedIntegerSeries TruncatedIntegerSeries::monomial(std::size_t trunc, std::size_t k,
                                                        long long c) {
  TruncatedIntegerSeries s(trunc);
  if (k <= trunc) s.coeffs_[k] = c;
  return s;
}

long long TruncatedIntegerSeries::coeff(std::size_t i) const {
  if (i >= coeffs_.size())
    throw std::out_of_range("series: coefficient past the truncation order");
  return coeffs_[i];
}

long long TruncatedIntegerSeries::degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (coeffs_[i] != 0) return static_cast<long long>(i);
  return -1;
}

TruncatedIntegerSeries TruncatedIntegerSeries::operator+(const TruncatedIntegerSeries& o) const {
  TruncatedIntegerSeries out(std::min(trunc(), o.trunc()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return out;
}

TruncatedIntegerSeries TruncatedIntegerSeries::operator-(const TruncatedIntegerSeries& o) const {
  TruncatedIntegerSeries out(std::min(trunc(), o.trunc()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return out;
}

TruncatedIntegerSeries TruncatedIntegerSeries::operator*(const TruncatedIntegerSeries& o) const {
  TruncatedIntegerSeries out(std::min(trunc(), o.trunc()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.coeffs_.size(); ++j)
      out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return out;
}

TruncatedIntegerSeries TruncatedIntegerSeries::operator*(long long c) const {
  TruncatedIntegerSeries out = *this;
  for (long long& v : out.coeffs_) v *= c;
  return out;
}

TruncatedIntegerSeries TruncatedIntegerSeries::shift(std::size_t k) const {
  TruncatedIntegerSeries out(trunc());
  for (std::size_t i = 0; i + k < coeffs_.size(); ++i) out.coeffs_[i + k] = coeffs_[i];
  return out;
}

TruncatedIntegerSeries TruncatedIntegerSeries::geometric(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("series: geometric factor needs k >= 1");
  TruncatedIntegerSeries out = *this;
  for (std::size_t i = k; i < out.coeffs_.size(); ++i) out.coeffs_[i] += out.coeffs_[i - k];
  return out;
}

TruncatedIntegerSeries TruncatedIntegerSeries::truncated(std::size_t new_trunc) const {
  if (new_trunc >= trunc()) return *this;
  TruncatedIntegerSeries out(new_trunc);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i];
  return out;
}

bool TruncatedIntegerSeries::agrees_through(const TruncatedIntegerSeries& o,
                                            std::size_t degree) const {
  if (degree > trunc() || degree > o.trunc())
    throw std::out_of_range("series: comparison past a truncation order");
  for (std::size_t i = 0; i <= degree; ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

std::string TruncatedIntegerSeries::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    long long c = coeffs_[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || i == 0) out += std::to_string(a);
    if (i > 0) {
      if (a != 1) out += "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::size_t default_truncation(unsigned n) { return 2 * static_cast<std::size_t>(n) + 4; }

namespace {

std::size_t resolve_trunc(unsigned n, std::size_t trunc) {
  if (trunc == 0) return default_truncation(n);
  if (trunc < 2 * static_cast<std::size_t>(n))
    throw std::invalid_argument("series: truncation order below 2n");
  return trunc;
}

// 1 + t^2 + ... + t^(2m) as a series of the given order.
TruncatedIntegerSeries even_block(std::size_t trunc, unsigned m) {
  TruncatedIntegerSeries s(trunc);
  std::vector<long long> c(trunc + 1, 0);
  for (unsigned k = 0; k <= m && 2 * static_cast<std::size_t>(k) <= trunc; ++k)
    c[2 * static_cast<std::size_t>(k)] = 1;
  return TruncatedIntegerSeries::from_coeffs(trunc, std::move(c));
}

}  // namespace

std::vector<Stratum> semistable_strata(unsigned n, std::size_t trunc) {
  if (n == 0) throw std::invalid_argument("strata: n must be positive");
  std::vector<Stratum> out;
  TruncatedIntegerSeries line = TruncatedIntegerSeries::monomial(trunc, 0).geometric(2);
  // Strata concentrated over the base-point section, one per weight j above
  // n/2. For even n the top weight j = n does not contribute a stratum of
  // this family (its locus merges with the second family).
  unsigned hi = (n % 2 == 0) ? n - 1 : n;
  for (unsigned j = n / 2 + 1; j <= hi; ++j)
    out.push_back({"base:" + std::to_string(j), j, line});
  for (unsigned j = 0; j <= n; ++j)
    out.push_back({"fiber:" + std::to_string(j), j + 1, line});
  return out;
}

TruncatedIntegerSeries equivariant_series_yss(unsigned n, std::size_t trunc) {
  if (n == 0) throw std::invalid_argument("series: n must be positive");
  std::size_t N = resolve_trunc(n, trunc);
  TruncatedIntegerSeries ambient = even_block(N, 2) * even_block(N, n);
  ambient = ambient.geometric(4);
  TruncatedIntegerSeries result = ambient;
  for (const Stratum& s : semistable_strata(n, N))
    result = result - s.factor.shift(2 * static_cast<std::size_t>(s.codimension));
  return result;
}

TruncatedIntegerSeries poincare_quotient_odd(unsigned n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("series: n must be odd and at least 3");
  std::size_t N = default_truncation(n);
  std::vector<long long> c(N + 1, 0);
  for (unsigned j = 0; j + 1 <= n; ++j)
    c[2 * static_cast<std::size_t>(j)] = 1 + std::min(j, n - 1 - j) / 2;
  return TruncatedIntegerSeries::from_coeffs(N, std::move(c));
}

TruncatedIntegerSeries poincare_partial_desing(unsigned n, std::size_t trunc) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("series: n must be even and at least 4");
  std::size_t N = resolve_trunc(n, trunc);
  TruncatedIntegerSeries result = equivariant_series_yss(n, N);
  // + (t^2 + t^4 + ... + t^(2n-2)) / (1 - t^4)
  result = result + even_block(N, n - 2).shift(2).geometric(4);
  // - t^n (1 + t^2 + ... + t^n) / (1 - t^2)
  result = result - even_block(N, n / 2).shift(n).geometric(2);
  return result;
}

TruncatedIntegerSeries intersection_poincare(unsigned n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("series: n must be even and at least 4");
  std::size_t N = default_truncation(n);
  TruncatedIntegerSeries result = poincare_partial_desing(n, N);
  std::vector<long long> c(N + 1, 0);
  for (unsigned j = 1; j + 1 < n; ++j)
    c[2 * static_cast<std::size_t>(j)] = (std::min(j, n - 1 - j) + 1) / 2;
  return result - TruncatedIntegerSeries::from_coeffs(N, std::move(c));
}

TruncatedIntegerSeries poincare_stable_quotient(unsigned n) {
  if (n < 2) throw std::invalid_argument("series: n must be at least 2");
  std::size_t N = default_truncation(n);
  unsigned top = (n % 2 == 1) ? n - 1 : n - 2;
  return even_block(N, top / 2);
}

TruncatedIntegerSeries poincare_binary_quotient(unsigned n, std::size_t trunc) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("series: n must be odd and at least 3");
  std::size_t N = resolve_trunc(n, trunc);
  TruncatedIntegerSeries result = even_block(N, n).geometric(4);
  TruncatedIntegerSeries line = TruncatedIntegerSeries::monomial(N, 0).geometric(2);
  for (unsigned j = n / 2 + 1; j <= n; ++j)
    result = result - line.shift(2 * (static_cast<std::size_t>(j) - 1));
  return result;
}

}  // namespace ngit
