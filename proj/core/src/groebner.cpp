#include "ngit/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ngit {

namespace {

// Terms sorted strictly descending under the active monomial order.
struct WPoly {
  std::vector<Term> terms;
  bool empty() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

std::vector<Term> sorted_terms(const Polynomial& p, const MonomialOrder& ord) {
  std::vector<Term> t = p.terms();
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  return t;
}

// c * m * g as a descending term list.
std::vector<Term> scale_shift(const std::vector<Term>& g, const Rational& c, const Monomial& m) {
  std::vector<Term> out;
  out.reserve(g.size());
  for (const Term& t : g) out.push_back({t.mono * m, t.coeff * c});
  return out;
}

std::vector<Term> merge_descending(const std::vector<Term>& a, std::size_t a_from,
                                   const std::vector<Term>& b, std::size_t b_from,
                                   const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve((a.size() - a_from) + (b.size() - b_from));
  std::size_t i = a_from, j = b_from;
  while (i < a.size() && j < b.size()) {
    int cmp = ord.compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j++]);
    } else {
      Rational v = a[i].coeff + b[j].coeff;
      if (!v.is_zero()) out.push_back({a[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

// Scales so all coefficients are integers with gcd one and the leading
// coefficient is positive.
void make_primitive(WPoly& p) {
  if (p.empty()) return;
  Integer den(1);
  for (const Term& t : p.terms) den = lcm(den, t.coeff.denominator());
  Integer num(0);
  for (const Term& t : p.terms) num = gcd(num, t.coeff.numerator() * (den / t.coeff.denominator()));
  Rational scale = Rational(den, num);
  if (p.lead().coeff.sign() < 0) scale = -scale;
  for (Term& t : p.terms) t.coeff *= scale;
}

// Full reduction against every usable basis element; deterministic reducer
// choice (first index whose leading monomial divides).
WPoly reduce_full(WPoly h, const std::vector<WPoly>& basis, const std::vector<char>* usable,
                  const MonomialOrder& ord) {
  std::vector<Term> out;
  std::vector<Term> work = std::move(h.terms);
  std::size_t cur = 0;
  while (cur < work.size()) {
    const Term& head = work[cur];
    const WPoly* red = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (usable && !(*usable)[k]) continue;
      if (basis[k].empty()) continue;
      if (basis[k].lead().mono.divides(head.mono)) {
        red = &basis[k];
        break;
      }
    }
    if (!red) {
      out.push_back(head);
      ++cur;
      continue;
    }
    Rational c = -(head.coeff / red->lead().coeff);
    Monomial m = head.mono.quotient(red->lead().mono);
    std::vector<Term> sg = scale_shift(red->terms, c, m);
    work = merge_descending(work, cur + 1, sg, 1, ord);
    cur = 0;
  }
  return WPoly{std::move(out)};
}

struct SPair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t degree;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& ord, StepBudget& budget) : ord_(ord), budget_(budget) {}

  void add_input(const Polynomial& p) {
    if (p.is_zero()) return;
    WPoly w{sorted_terms(p, ord_)};
    make_primitive(w);
    insert_element(std::move(w));
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      std::size_t best = select_pair();
      SPair pair = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      budget_.charge();
      WPoly s = s_polynomial(pair);
      WPoly r = reduce_full(std::move(s), basis_, nullptr, ord_);
      if (!r.empty()) {
        make_primitive(r);
        insert_element(std::move(r));
      }
    }
  }

  std::vector<Polynomial> reduced_basis(const RingPtr& ring) {
    if (unit_) {
      return {Polynomial::constant(ring, Rational(1))};
    }
    std::vector<std::size_t> order_idx(basis_.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
      return ord_.greater(basis_[b].lead().mono, basis_[a].lead().mono);
    });
    std::vector<char> keep(basis_.size(), 0);
    std::vector<std::size_t> kept;
    for (std::size_t idx : order_idx) {
      bool dominated = false;
      for (std::size_t k : kept)
        if (basis_[k].lead().mono.divides(basis_[idx].lead().mono)) {
          dominated = true;
          break;
        }
      if (!dominated) {
        keep[idx] = 1;
        kept.push_back(idx);
      }
    }
    std::vector<Polynomial> out;
    out.reserve(kept.size());
    for (std::size_t k : kept) {
      keep[k] = 0;
      WPoly r = reduce_full(basis_[k], basis_, &keep, ord_);
      keep[k] = 1;
      Rational lc = r.lead().coeff;
      for (Term& t : r.terms) t.coeff /= lc;
      out.push_back(Polynomial::from_terms(ring, std::move(r.terms)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord_.greater(b.leading_term(ord_).mono, a.leading_term(ord_).mono);
    });
    return out;
  }

 private:
  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const SPair& a = pairs_[k];
      const SPair& b = pairs_[best];
      if (a.degree != b.degree) {
        if (a.degree < b.degree) best = k;
        continue;
      }
      int c = ord_.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = k;
    }
    return best;
  }

  WPoly s_polynomial(const SPair& p) const {
    const WPoly& f = basis_[p.i];
    const WPoly& g = basis_[p.j];
    Monomial mf = p.lcm.quotient(f.lead().mono);
    Monomial mg = p.lcm.quotient(g.lead().mono);
    std::vector<Term> a = scale_shift(f.terms, f.lead().coeff.inverse(), mf);
    std::vector<Term> b = scale_shift(g.terms, -(g.lead().coeff.inverse()), mg);
    return WPoly{merge_descending(a, 1, b, 1, ord_)};
  }

  // Gebauer-Moeller pair update.
  void insert_element(WPoly w) {
    if (w.lead().mono.is_unit()) {
      unit_ = true;
      return;
    }
    const std::size_t t = basis_.size();
    const Monomial& lt = w.lead().mono;

    std::vector<SPair> fresh;
    fresh.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
      Monomial l = Monomial::lcm(basis_[i].lead().mono, lt);
      fresh.push_back({i, t, std::move(l), 0});
    }
    for (SPair& p : fresh) p.degree = p.lcm.degree();

    // Criterion M: drop (i,t) when another new pair's lcm properly divides.
    std::vector<char> drop(fresh.size(), 0);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || drop[a]) continue;
        if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm)) {
          drop[a] = 1;
          break;
        }
      }
    }
    // Criterion F: one representative per lcm value.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (!drop[b] && fresh[b].lcm == fresh[a].lcm) drop[b] = 1;
      }
    }
    // Criterion B: coprime leading terms reduce to zero.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!drop[a] && basis_[fresh[a].i].lead().mono.coprime(lt)) drop[a] = 1;
    }

    // Prune old pairs now subsumed by the new element.
    std::vector<SPair> surviving;
    surviving.reserve(pairs_.size());
    for (SPair& p : pairs_) {
      bool subsumed = lt.divides(p.lcm) &&
                      Monomial::lcm(basis_[p.i].lead().mono, lt) != p.lcm &&
                      Monomial::lcm(basis_[p.j].lead().mono, lt) != p.lcm;
      if (!subsumed) surviving.push_back(std::move(p));
    }
    pairs_ = std::move(surviving);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (!drop[a]) pairs_.push_back(std::move(fresh[a]));

    basis_.push_back(std::move(w));
  }

  const MonomialOrder& ord_;
  StepBudget& budget_;
  std::vector<WPoly> basis_;
  std::vector<SPair> pairs_;
  bool unit_ = false;
};

void require_ring(const Ideal& ideal, const Polynomial& f) {
  if (!same_ring(ideal.ring(), f.ring()))
    throw std::invalid_argument("Ideal: polynomial from a different ring");
}

std::string fresh_variable_name(const RingPtr& ring, const std::string& stem) {
  std::string name = stem;
  while (ring->index_of(name)) name += "_";
  return name;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("Ideal: null ring");
  for (Polynomial& g : gens) {
    if (!same_ring(g.ring(), ring_))
      throw std::invalid_argument("Ideal: generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& ord, StepBudget* budget) {
  StepBudget local;
  StepBudget& b = budget ? *budget : local;
  Buchberger engine(ord, b);
  for (const Polynomial& g : ideal.generators()) engine.add_input(g);
  engine.run();
  return Ideal(ideal.ring(), engine.reduced_basis(ideal.ring()));
}

Polynomial normal_form(const Polynomial& f, const Ideal& basis, const MonomialOrder& ord) {
  require_ring(basis, f);
  std::vector<WPoly> divisors;
  divisors.reserve(basis.generators().size());
  for (const Polynomial& g : basis.generators()) divisors.push_back(WPoly{sorted_terms(g, ord)});
  WPoly r = reduce_full(WPoly{sorted_terms(f, ord)}, divisors, nullptr, ord);
  return Polynomial::from_terms(f.ring(), std::move(r.terms));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, StepBudget* budget) {
  const RingPtr& ring = ideal.ring();
  for (std::size_t i : drop)
    if (i >= ring->size()) throw std::invalid_argument("eliminate: variable index out of range");
  MonomialOrder ord = MonomialOrder::elimination(ring->size(), drop);
  Ideal gb = groebner_basis(ideal, ord, budget);
  std::vector<char> dropped(ring->size(), 0);
  for (std::size_t i : drop) dropped[i] = 1;
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.generators()) {
    bool clean = true;
    for (const Term& t : g.terms()) {
      for (std::size_t i = 0; clean && i < ring->size(); ++i)
        if (dropped[i] && t.mono.exponent(i) > 0) clean = false;
      if (!clean) break;
    }
    if (clean) kept.push_back(g);
  }
  return Ideal(ring, std::move(kept));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f, StepBudget* budget) {
  require_ring(ideal, f);
  const RingPtr& ring = ideal.ring();
  std::string tname = fresh_variable_name(ring, "t");
  RingPtr big = extend_ring(ring, {tname});
  std::vector<int> up(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) up[i] = static_cast<int>(i);

  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators()) gens.push_back(g.map_ring(big, up));
  Polynomial t = Polynomial::variable(big, ring->size());
  gens.push_back(t * f.map_ring(big, up) - Polynomial::constant(big, Rational(1)));

  Ideal elim = eliminate(Ideal(big, std::move(gens)), {ring->size()}, budget);
  std::vector<int> down(big->size());
  for (std::size_t i = 0; i < ring->size(); ++i) down[i] = static_cast<int>(i);
  down[ring->size()] = -1;
  std::vector<Polynomial> out;
  for (const Polynomial& g : elim.generators()) out.push_back(g.map_ring(ring, down));
  return Ideal(ring, std::move(out));
}

std::vector<std::string> default_tag_names(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back("y" + std::to_string(i + 1));
  return names;
}

namespace {

struct TagSetup {
  RingPtr combined;
  RingPtr tag_ring;
  std::vector<Polynomial> graph;           // y_i - g_i in the combined ring
  std::vector<std::size_t> original_vars;  // indices of the original block
};

TagSetup tag_setup(const std::vector<Polynomial>& gens, std::vector<std::string> tag_names) {
  if (gens.empty()) throw std::invalid_argument("subalgebra: no generators");
  const RingPtr& ring = gens[0].ring();
  for (const Polynomial& g : gens)
    if (!same_ring(g.ring(), ring))
      throw std::invalid_argument("subalgebra: generators from different rings");
  if (tag_names.empty()) tag_names = default_tag_names(gens.size());
  if (tag_names.size() != gens.size())
    throw std::invalid_argument("subalgebra: one tag name per generator required");

  TagSetup s;
  s.combined = extend_ring(ring, tag_names);
  s.tag_ring = make_ring(tag_names);
  std::vector<int> up(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) {
    up[i] = static_cast<int>(i);
    s.original_vars.push_back(i);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Polynomial yi = Polynomial::variable(s.combined, ring->size() + i);
    s.graph.push_back(yi - gens[i].map_ring(s.combined, up));
  }
  return s;
}

}  // namespace

MembershipWitness subalgebra_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                        const std::vector<std::string>& tag_names,
                                        StepBudget* budget) {
  TagSetup s = tag_setup(gens, tag_names);
  const RingPtr& ring = f.ring();
  if (!same_ring(ring, gens[0].ring()))
    throw std::invalid_argument("subalgebra: polynomial from a different ring");

  MonomialOrder ord = MonomialOrder::elimination(s.combined->size(), s.original_vars);
  Ideal gb = groebner_basis(Ideal(s.combined, s.graph), ord, budget);

  std::vector<int> up(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) up[i] = static_cast<int>(i);
  Polynomial nf = normal_form(f.map_ring(s.combined, up), gb, ord);

  bool member = true;
  for (const Term& t : nf.terms()) {
    for (std::size_t i : s.original_vars)
      if (t.mono.exponent(i) > 0) {
        member = false;
        break;
      }
    if (!member) break;
  }

  MembershipWitness result;
  result.member = member;
  result.tag_ring = s.tag_ring;
  if (member) {
    std::vector<int> down(s.combined->size(), -1);
    for (std::size_t i = 0; i < gens.size(); ++i)
      down[ring->size() + i] = static_cast<int>(i);
    result.witness = nf.map_ring(s.tag_ring, down);
  } else {
    result.witness = Polynomial::zero(s.tag_ring);
  }
  return result;
}

Ideal relation_ideal(const std::vector<Polynomial>& gens,
                     const std::vector<std::string>& tag_names, StepBudget* budget) {
  TagSetup s = tag_setup(gens, tag_names);
  Ideal elim = eliminate(Ideal(s.combined, s.graph), s.original_vars, budget);
  const std::size_t nvars = gens[0].ring()->size();
  std::vector<int> down(s.combined->size(), -1);
  for (std::size_t i = 0; i < gens.size(); ++i) down[nvars + i] = static_cast<int>(i);
  std::vector<Polynomial> out;
  for (const Polynomial& g : elim.generators())
    out.push_back(g.map_ring(s.tag_ring, down).primitive_part());
  return Ideal(s.tag_ring, std::move(out));
}

bool radical_membership(const Polynomial& f, const Ideal& ideal, StepBudget* budget) {
  require_ring(ideal, f);
  const RingPtr& ring = ideal.ring();
  std::string tname = fresh_variable_name(ring, "t");
  RingPtr big = extend_ring(ring, {tname});
  std::vector<int> up(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) up[i] = static_cast<int>(i);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators()) gens.push_back(g.map_ring(big, up));
  Polynomial t = Polynomial::variable(big, ring->size());
  gens.push_back(Polynomial::constant(big, Rational(1)) - t * f.map_ring(big, up));
  Ideal gb = groebner_basis(Ideal(big, std::move(gens)), MonomialOrder::grevlex(), budget);
  for (const Polynomial& g : gb.generators())
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

}  // namespace ngit
