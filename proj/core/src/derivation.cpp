#include "ngit/derivation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ngit {

namespace {

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    std::uint32_t e = t.mono.exponent(i);
    if (e == 0) continue;
    std::vector<std::uint32_t> exps = t.mono.exponents();
    exps[i] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * Rational(static_cast<long>(e))});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

}  // namespace

LocallyNilpotentDerivation::LocallyNilpotentDerivation(RingPtr ring,
                                                       std::vector<Polynomial> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (!ring_) throw std::invalid_argument("derivation: null ring");
  if (images_.size() != ring_->size())
    throw std::invalid_argument("derivation: one image per variable required");
  for (const Polynomial& im : images_)
    if (!same_ring(im.ring(), ring_))
      throw std::invalid_argument("derivation: image outside the ring");
}

Polynomial apply_derivation(const LocallyNilpotentDerivation& d, const Polynomial& f) {
  if (!same_ring(f.ring(), d.ring()))
    throw std::invalid_argument("derivation: polynomial from a different ring");
  Polynomial out = Polynomial::zero(d.ring());
  for (std::size_t i = 0; i < d.ring()->size(); ++i) {
    if (d.image(i).is_zero()) continue;
    Polynomial df = partial_derivative(f, i);
    if (!df.is_zero()) out += df * d.image(i);
  }
  return out;
}

NilpotencyResult is_locally_nilpotent(const LocallyNilpotentDerivation& d, unsigned bound) {
  if (bound == 0) throw std::invalid_argument("nilpotency: bound must be positive");
  NilpotencyResult result;
  result.nilpotent = true;
  for (std::size_t i = 0; i < d.ring()->size(); ++i) {
    Polynomial g = Polynomial::variable(d.ring(), i);
    unsigned k = 0;
    while (!g.is_zero() && k <= bound) {
      g = apply_derivation(d, g);
      ++k;
    }
    if (!g.is_zero()) {
      result.nilpotent = false;
      result.failed_variable = i;
      return result;
    }
    result.certificate.index.push_back(k);
  }
  return result;
}

LocallyNilpotentDerivation weitzenboeck(unsigned n) {
  if (n == 0) throw std::invalid_argument("weitzenboeck: n must be positive");
  RingPtr ring = make_ring("x", n + 1);
  std::vector<Polynomial> images;
  images.push_back(Polynomial::zero(ring));
  for (unsigned i = 1; i <= n; ++i)
    images.push_back(Polynomial::variable(ring, i - 1) * Rational(static_cast<long>(i)));
  return LocallyNilpotentDerivation(std::move(ring), std::move(images));
}

DixmierImage dixmier_map(const LocallyNilpotentDerivation& d, std::size_t slice_num,
                         const Polynomial& slice_den, std::size_t x) {
  const RingPtr& ring = d.ring();
  if (slice_num >= ring->size() || x >= ring->size())
    throw std::invalid_argument("dixmier: variable index out of range");
  if (!same_ring(slice_den.ring(), ring) || slice_den.is_zero())
    throw std::invalid_argument("dixmier: bad slice denominator");
  if (!apply_derivation(d, slice_den).is_zero())
    throw std::invalid_argument("dixmier: slice denominator is not in the kernel");
  if (apply_derivation(d, Polynomial::variable(ring, slice_num)) != slice_den)
    throw std::invalid_argument("dixmier: slice numerator does not map to the denominator");

  constexpr unsigned kIterationCap = 4096;
  std::vector<Polynomial> iterates{Polynomial::variable(ring, x)};
  while (!iterates.back().is_zero()) {
    if (iterates.size() > kIterationCap)
      throw std::invalid_argument("dixmier: derivation is not locally nilpotent on the variable");
    iterates.push_back(apply_derivation(d, iterates.back()));
  }
  iterates.pop_back();  // drop the final zero
  const std::size_t K = iterates.size() - 1;

  Polynomial v = Polynomial::variable(ring, slice_num);
  Polynomial num = Polynomial::zero(ring);
  Rational factorial(1);
  for (std::size_t k = 0; k <= K; ++k) {
    if (k > 0) factorial *= Rational(static_cast<long>(k));
    Rational c = Rational(k % 2 == 0 ? 1 : -1) / factorial;
    num += iterates[k] * v.pow(static_cast<std::uint32_t>(k)) *
           slice_den.pow(static_cast<std::uint32_t>(K - k)) * c;
  }

  unsigned power = static_cast<unsigned>(K);
  while (power > 0 && !num.is_zero()) {
    std::optional<Polynomial> q = try_divide_exact(num, slice_den);
    if (!q) break;
    num = std::move(*q);
    --power;
  }
  if (num.is_zero()) power = 0;
  return {std::move(num), power};
}

namespace {

Polynomial normalized(const Polynomial& f) { return f.primitive_part(); }

// Deterministic processing order: ascending degree, then the canonical
// polynomial order.
void sort_candidates(std::vector<Polynomial>& v) {
  std::sort(v.begin(), v.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return Polynomial::cmp(a, b) < 0;
  });
}

}  // namespace

std::vector<Polynomial> kernel_generators(const LocallyNilpotentDerivation& d,
                                          StepBudget* budget) {
  StepBudget local;
  StepBudget& bud = budget ? *budget : local;
  const RingPtr& ring = d.ring();

  // Localization witness: first variable v with D(v) nonzero and in the
  // kernel.
  std::size_t slice = ring->size();
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (d.image(i).is_zero()) continue;
    if (apply_derivation(d, d.image(i)).is_zero()) {
      slice = i;
      break;
    }
  }
  if (slice == ring->size()) {
    bool all_zero = true;
    for (const Polynomial& im : d.images())
      if (!im.is_zero()) all_zero = false;
    if (all_zero) {
      std::vector<Polynomial> vars;
      for (std::size_t i = 0; i < ring->size(); ++i)
        vars.push_back(Polynomial::variable(ring, i));
      return vars;
    }
    throw std::invalid_argument(
        "kernel_generators: no variable v with D(v) in the kernel and nonzero");
  }
  Polynomial a = d.image(slice);

  std::vector<Polynomial> gens;
  auto try_adjoin = [&](const Polynomial& candidate) {
    Polynomial h = normalized(candidate);
    if (h.is_zero() || h.is_constant()) return false;
    if (!gens.empty() && subalgebra_membership(h, gens, {}, &bud).member) return false;
    gens.push_back(std::move(h));
    return true;
  };

  std::vector<Polynomial> seed;
  for (std::size_t i = 0; i < ring->size(); ++i)
    seed.push_back(dixmier_map(d, slice, a, i).numerator);
  seed.push_back(a);
  sort_candidates(seed);
  for (const Polynomial& c : seed) try_adjoin(c);

  // Colon extraction: adjoin every kernel element h with a h in the current
  // subalgebra, until a full round adds nothing.
  while (true) {
    std::vector<std::string> tags = default_tag_names(gens.size());
    RingPtr big = extend_ring(ring, tags);
    std::vector<int> up(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) up[i] = static_cast<int>(i);

    std::vector<Polynomial> graph;
    for (std::size_t j = 0; j < gens.size(); ++j)
      graph.push_back(Polynomial::variable(big, ring->size() + j) - gens[j].map_ring(big, up));
    graph.push_back(a.map_ring(big, up));

    std::vector<std::size_t> xblock(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) xblock[i] = i;
    Ideal mod_a = eliminate(Ideal(big, std::move(graph)), xblock, &bud);

    std::vector<Polynomial> candidates;
    for (const Polynomial& P : mod_a.generators()) {
      // Substitute the generators for the tags, then peel one factor of a.
      std::vector<Polynomial> imgs;
      for (std::size_t i = 0; i < ring->size(); ++i) imgs.push_back(Polynomial::variable(ring, i));
      for (const Polynomial& g : gens) imgs.push_back(g);
      Polynomial value = P.substitute(ring, imgs);
      if (value.is_zero()) continue;
      std::optional<Polynomial> h = try_divide_exact(value, a);
      if (!h)
        throw std::logic_error("kernel_generators: colon candidate not divisible by the witness");
      candidates.push_back(std::move(*h));
    }
    sort_candidates(candidates);
    bool grew = false;
    for (const Polynomial& c : candidates)
      if (try_adjoin(c)) grew = true;
    if (!grew) break;
  }

  // Minimalize: drop any generator expressible in the others, largest first.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
      return gens[l].total_degree() > gens[r].total_degree();
    });
    for (std::size_t idx : order) {
      if (gens.size() == 1) break;
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != idx) others.push_back(gens[j]);
      if (subalgebra_membership(gens[idx], others, {}, &bud).member) {
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(idx));
        changed = true;
        break;
      }
    }
  }
  sort_candidates(gens);
  return gens;
}

SubalgebraPresentation invariant_presentation(unsigned n, StepBudget* budget) {
  StepBudget local;
  StepBudget& bud = budget ? *budget : local;
  std::vector<Polynomial> gens = kernel_generators(weitzenboeck(n), &bud);

  std::vector<std::string> tags;
  for (std::size_t i = 0; i < gens.size(); ++i) tags.push_back("y" + std::to_string(i));

  SubalgebraPresentation pres{std::move(gens), {}, {}, Ideal(make_ring(tags))};
  for (const Polynomial& g : pres.generators) pres.degrees.push_back(g.total_degree());
  pres.relations = relation_ideal(pres.generators, tags, &bud);
  pres.tag_ring = pres.relations.ring();
  return pres;
}

Ideal nullcone_check(unsigned n, StepBudget* budget) {
  StepBudget local;
  StepBudget& bud = budget ? *budget : local;
  LocallyNilpotentDerivation d = weitzenboeck(n);
  std::vector<Polynomial> gens = kernel_generators(d, &bud);
  Ideal invariants(d.ring(), gens);

  std::vector<Polynomial> vanish;
  for (std::size_t i = 0; i < d.ring()->size(); ++i) {
    Polynomial xi = Polynomial::variable(d.ring(), i);
    if (radical_membership(xi, invariants, &bud)) vanish.push_back(xi);
  }
  Ideal coordinate(d.ring(), vanish);
  for (const Polynomial& g : gens)
    if (!radical_membership(g, coordinate, &bud))
      throw std::logic_error("nullcone_check: invariant zero locus is not a coordinate subspace");
  return coordinate;
}

}  // namespace ngit
