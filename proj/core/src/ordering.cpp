#include "ngit/ordering.hpp"

#include <stdexcept>

namespace ngit {

namespace {

int cmp_u64(std::uint64_t a, std::uint64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

// Grevlex tie-break on a subset of positions (degrees already equal): the
// monomial with the smaller exponent in the last distinguishing position
// ranks above.
int revlex_tail(const Monomial& a, const Monomial& b, const std::vector<char>* mask, bool in_mask) {
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = ea.size(); i-- > 0;) {
    if (mask && (((*mask)[i] != 0) != in_mask)) continue;
    if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
  }
  return 0;
}

std::uint64_t masked_degree(const Monomial& m, const std::vector<char>& mask, bool in_mask) {
  const auto& e = m.exponents();
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if ((mask[i] != 0) == in_mask) d += e[i];
  return d;
}

}  // namespace

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(Kind::Grevlex, {}); }

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::Lex, {}); }

MonomialOrder MonomialOrder::elimination(std::size_t arity,
                                         const std::vector<std::size_t>& leading_block) {
  std::vector<char> mask(arity, 0);
  for (std::size_t i : leading_block) {
    if (i >= arity) throw std::invalid_argument("MonomialOrder: block index out of range");
    mask[i] = 1;
  }
  return MonomialOrder(Kind::Block, std::move(mask));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != b.arity()) throw std::invalid_argument("MonomialOrder: arity mismatch");
  switch (kind_) {
    case Kind::Grevlex: {
      if (int c = cmp_u64(a.degree(), b.degree())) return c;
      return revlex_tail(a, b, nullptr, false);
    }
    case Kind::Lex: {
      const auto& ea = a.exponents();
      const auto& eb = b.exponents();
      for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
      return 0;
    }
    case Kind::Block: {
      if (mask_.size() != a.arity())
        throw std::invalid_argument("MonomialOrder: block mask arity mismatch");
      if (int c = cmp_u64(masked_degree(a, mask_, true), masked_degree(b, mask_, true))) return c;
      if (int c = revlex_tail(a, b, &mask_, true)) return c;
      if (int c = cmp_u64(masked_degree(a, mask_, false), masked_degree(b, mask_, false))) return c;
      return revlex_tail(a, b, &mask_, false);
    }
  }
  return 0;
}

}  // namespace ngit
