#include "ngit/linrep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ngit {

namespace {

void enumerate_exponents(const std::vector<std::uint64_t>& weights, std::uint64_t remaining,
                         std::size_t pos, std::vector<std::uint32_t>& acc,
                         std::vector<Monomial>& out) {
  if (pos == weights.size()) {
    if (remaining == 0) out.push_back(Monomial(acc));
    return;
  }
  if (pos + 1 == weights.size()) {
    if (remaining % weights[pos] == 0) {
      acc[pos] = static_cast<std::uint32_t>(remaining / weights[pos]);
      out.push_back(Monomial(acc));
      acc[pos] = 0;
    }
    return;
  }
  for (std::uint64_t e = 0; e * weights[pos] <= remaining; ++e) {
    acc[pos] = static_cast<std::uint32_t>(e);
    enumerate_exponents(weights, remaining - e * weights[pos], pos + 1, acc, out);
  }
  acc[pos] = 0;
}

}  // namespace

GradedMonomialBasis monomial_basis(const RingPtr& ring, std::vector<std::uint64_t> weights,
                                   std::uint64_t degree) {
  if (!ring || ring->size() == 0) throw std::invalid_argument("basis: empty ring");
  if (weights.size() != ring->size())
    throw std::invalid_argument("basis: one weight per variable required");
  for (std::uint64_t w : weights)
    if (w == 0) throw std::invalid_argument("basis: weights must be positive");
  if (degree == 0) throw std::invalid_argument("basis: degree must be positive");

  std::vector<Monomial> monos;
  std::vector<std::uint32_t> acc(ring->size(), 0);
  enumerate_exponents(weights, degree, 0, acc, monos);
  MonomialOrder ord = MonomialOrder::grevlex();
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return {ring, std::move(weights), degree, std::move(monos)};
}

SubstitutionAutomorphism::SubstitutionAutomorphism(RingPtr vars, RingPtr params,
                                                   std::vector<Polynomial> images)
    : vars_(std::move(vars)), params_(std::move(params)) {
  if (!vars_ || !params_) throw std::invalid_argument("substitution: null ring");
  combined_ = extend_ring(vars_, params_->names());
  if (images.size() != vars_->size())
    throw std::invalid_argument("substitution: one image per variable required");
  for (const Polynomial& im : images)
    if (!same_ring(im.ring(), combined_))
      throw std::invalid_argument("substitution: image outside the combined ring");
  images_ = std::move(images);
}

SubstitutionAutomorphism SubstitutionAutomorphism::identity(RingPtr vars, RingPtr params) {
  RingPtr combined = extend_ring(vars, params->names());
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < vars->size(); ++i)
    images.push_back(Polynomial::variable(combined, i));
  return SubstitutionAutomorphism(std::move(vars), std::move(params), std::move(images));
}

Polynomial SubstitutionAutomorphism::apply(const Polynomial& f) const {
  Polynomial g;
  if (same_ring(f.ring(), vars_)) {
    std::vector<int> up(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) up[i] = static_cast<int>(i);
    g = f.map_ring(combined_, up);
  } else if (same_ring(f.ring(), combined_)) {
    g = f;
  } else {
    throw std::invalid_argument("substitution: polynomial from a foreign ring");
  }
  std::vector<Polynomial> imgs = images_;
  for (std::size_t k = vars_->size(); k < combined_->size(); ++k)
    imgs.push_back(Polynomial::variable(combined_, k));
  return g.substitute(combined_, imgs);
}

SubstitutionAutomorphism compose(const SubstitutionAutomorphism& s,
                                 const SubstitutionAutomorphism& t) {
  if (!same_ring(s.vars_, t.vars_) || !same_ring(s.params_, t.params_))
    throw std::invalid_argument("substitution: composing over different rings");
  std::vector<Polynomial> images;
  for (const Polynomial& im : t.images_) images.push_back(s.apply(im));
  return SubstitutionAutomorphism(s.vars_, s.params_, std::move(images));
}

bool ParamMatrix::is_identity() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != entries.size()) return false;
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      if (i == j) {
        if (!entries[i][j].is_constant() || !entries[i][j].constant_value().is_one()) return false;
      } else if (!entries[i][j].is_zero()) {
        return false;
      }
    }
  }
  return true;
}

ParamMatrix operator*(const ParamMatrix& a, const ParamMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix: size mismatch");
  if (!same_ring(a.param_ring, b.param_ring))
    throw std::invalid_argument("matrix: parameter ring mismatch");
  std::size_t n = a.size();
  ParamMatrix out{a.param_ring,
                  std::vector<std::vector<Polynomial>>(
                      n, std::vector<Polynomial>(n, Polynomial::zero(a.param_ring)))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.entries[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.entries[k][j].is_zero()) continue;
        out.entries[i][j] += a.entries[i][k] * b.entries[k][j];
      }
    }
  return out;
}

Polynomial determinant(const ParamMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(m.param_ring, Rational(1));
  for (const auto& row : m.entries)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");

  std::vector<std::vector<Polynomial>> a = m.entries;
  Polynomial prev = Polynomial::constant(m.param_ring, Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return Polynomial::zero(m.param_ring);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        std::optional<Polynomial> quot = try_divide_exact(num, prev);
        if (!quot) throw std::logic_error("determinant: fraction-free step failed");
        a[i][j] = std::move(*quot);
      }
      a[i][k] = Polynomial::zero(m.param_ring);
    }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

ParamMatrix substitution_matrix(const SubstitutionAutomorphism& s, const GradedMonomialBasis& b) {
  if (!same_ring(s.var_ring(), b.ring))
    throw std::invalid_argument("substitution_matrix: basis over a different ring");
  const std::size_t nv = s.var_ring()->size();
  const std::size_t np = s.param_ring()->size();

  std::vector<std::uint64_t> wts = b.weights;
  wts.resize(nv + np, 0);
  for (std::size_t i = 0; i < nv; ++i) {
    const Polynomial& im = s.images()[i];
    if (im.is_zero()) continue;
    if (!im.is_homogeneous(wts) || im.weighted_degree(wts) != b.weights[i])
      throw std::invalid_argument("substitution_matrix: image of " + s.var_ring()->name(i) +
                                  " is not weighted-homogeneous of its weight");
  }

  std::map<std::vector<std::uint32_t>, std::size_t> row_of;
  for (std::size_t r = 0; r < b.monomials.size(); ++r)
    row_of.emplace(b.monomials[r].exponents(), r);

  const std::size_t n = b.monomials.size();
  std::vector<std::vector<std::vector<Term>>> cells(
      n, std::vector<std::vector<Term>>(n));

  for (std::size_t j = 0; j < n; ++j) {
    Polynomial image = Polynomial::constant(s.combined_ring(), Rational(1));
    for (std::size_t i = 0; i < nv; ++i) {
      std::uint32_t e = b.monomials[j].exponent(i);
      if (e > 0) image *= s.images()[i].pow(e);
    }
    for (const Term& t : image.terms()) {
      std::vector<std::uint32_t> geo(t.mono.exponents().begin(),
                                     t.mono.exponents().begin() + nv);
      std::vector<std::uint32_t> par(t.mono.exponents().begin() + nv,
                                     t.mono.exponents().end());
      auto it = row_of.find(geo);
      if (it == row_of.end())
        throw std::invalid_argument("substitution_matrix: image leaves the basis span");
      cells[it->second][j].push_back({Monomial(std::move(par)), t.coeff});
    }
  }

  ParamMatrix out{s.param_ring(),
                  std::vector<std::vector<Polynomial>>(
                      n, std::vector<Polynomial>(n, Polynomial::zero(s.param_ring())))};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!cells[r][c].empty())
        out.entries[r][c] = Polynomial::from_terms(s.param_ring(), std::move(cells[r][c]));
  return out;
}

RingPtr doubled_param_ring(const RingPtr& params) {
  std::vector<std::string> names;
  for (const std::string& p : params->names()) names.push_back(p + "'");
  for (const std::string& p : params->names()) names.push_back(p + "''");
  return make_ring(std::move(names));
}

std::vector<Polynomial> additive_rule(const RingPtr& params, const RingPtr& doubled) {
  std::size_t np = params->size();
  if (doubled->size() != 2 * np) throw std::invalid_argument("rule: doubled ring of wrong size");
  std::vector<Polynomial> rule;
  for (std::size_t k = 0; k < np; ++k)
    rule.push_back(Polynomial::variable(doubled, k) + Polynomial::variable(doubled, np + k));
  return rule;
}

bool group_law_check(const SubstitutionAutomorphism& family, const GradedMonomialBasis& basis,
                     const std::vector<Polynomial>& rule) {
  const RingPtr& vars = family.var_ring();
  const RingPtr& params = family.param_ring();
  const RingPtr& combined = family.combined_ring();
  const std::size_t nv = vars->size();
  const std::size_t np = params->size();

  // Identity at parameters zero.
  {
    std::vector<Polynomial> zero_imgs;
    for (std::size_t i = 0; i < nv; ++i) zero_imgs.push_back(Polynomial::variable(combined, i));
    for (std::size_t k = 0; k < np; ++k) zero_imgs.push_back(Polynomial::zero(combined));
    std::vector<Polynomial> at_zero;
    for (const Polynomial& im : family.images())
      at_zero.push_back(im.substitute(combined, zero_imgs));
    SubstitutionAutomorphism s0(vars, params, std::move(at_zero));
    if (!substitution_matrix(s0, basis).is_identity()) return false;
  }

  RingPtr doubled = doubled_param_ring(params);
  RingPtr big = extend_ring(vars, doubled->names());

  auto with_params_at = [&](std::size_t offset) {
    std::vector<int> map(combined->size());
    for (std::size_t i = 0; i < nv; ++i) map[i] = static_cast<int>(i);
    for (std::size_t k = 0; k < np; ++k) map[nv + k] = static_cast<int>(nv + offset + k);
    std::vector<Polynomial> imgs;
    for (const Polynomial& im : family.images()) imgs.push_back(im.map_ring(big, map));
    return SubstitutionAutomorphism(vars, doubled, std::move(imgs));
  };
  SubstitutionAutomorphism first = with_params_at(0);
  SubstitutionAutomorphism second = with_params_at(np);

  std::vector<Polynomial> law = rule.empty() ? additive_rule(params, doubled) : rule;
  if (law.size() != np) throw std::invalid_argument("group_law_check: one rule entry per parameter");
  std::vector<Polynomial> composite_imgs;
  {
    std::vector<Polynomial> imgs;
    for (std::size_t i = 0; i < nv; ++i) imgs.push_back(Polynomial::variable(big, i));
    std::vector<int> par_up(doubled->size());
    for (std::size_t t = 0; t < doubled->size(); ++t) par_up[t] = static_cast<int>(nv + t);
    for (const Polynomial& r : law) {
      if (!same_ring(r.ring(), doubled))
        throw std::invalid_argument("group_law_check: rule entry outside the doubled ring");
      imgs.push_back(r.map_ring(big, par_up));
    }
    for (const Polynomial& im : family.images())
      composite_imgs.push_back(im.substitute(big, imgs));
  }
  SubstitutionAutomorphism composite(vars, doubled, std::move(composite_imgs));

  ParamMatrix lhs = substitution_matrix(first, basis) * substitution_matrix(second, basis);
  ParamMatrix rhs = substitution_matrix(composite, basis);
  return lhs == rhs;
}

}  // namespace ngit
