#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngit/ordering.hpp"
#include "ngit/polynomial.hpp"

namespace ngit {

inline constexpr std::uint64_t kDefaultStepLimit = 1'000'000;

// Thrown when a computation exceeds its configured S-pair budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : std::runtime_error("step budget of " + std::to_string(limit) + " S-pair reductions exceeded"),
        limit(limit) {}
  std::uint64_t limit;
};

// Counts S-pair reductions across one logical computation. Each top-level
// call site owns its budget, so concurrent computations never share one.
struct StepBudget {
  explicit StepBudget(std::uint64_t limit = kDefaultStepLimit) : limit(limit) {}
  std::uint64_t limit;
  std::uint64_t used = 0;
  void charge(std::uint64_t n = 1) {
    used += n;
    if (used > limit) throw BudgetExceeded(limit);
  }
};

// Finite generating set of an ideal in a fixed ring. Zero generators are
// dropped on construction.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> gens = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool trivial() const { return gens_.empty(); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

// Reduced Groebner basis: monic generators, no leading term divides another,
// every generator fully reduced against the rest, sorted ascending by leading
// monomial. Deterministic for a given ideal and order.
Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& ord, StepBudget* budget = nullptr);

// Remainder of full multivariate division by the given polynomials. The
// result is canonical whenever the divisors form a Groebner basis for ord.
Polynomial normal_form(const Polynomial& f, const Ideal& basis, const MonomialOrder& ord);

// Generators of the intersection of the ideal with the subring omitting the
// given variables. Returned in the same ring; no dropped variable occurs.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop,
                StepBudget* budget = nullptr);

// Saturation I : f^infinity.
Ideal saturate(const Ideal& ideal, const Polynomial& f, StepBudget* budget = nullptr);

struct MembershipWitness {
  bool member = false;
  // For members: a polynomial w in the tag ring with w(g_1, ..., g_k) = f.
  Polynomial witness;
  RingPtr tag_ring;
};

// Does f lie in the subalgebra generated by gens? Decided with tag variables
// y_i - g_i and a normal form under an order ranking the original variables
// above the tags.
MembershipWitness subalgebra_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                        const std::vector<std::string>& tag_names = {},
                                        StepBudget* budget = nullptr);

// Ideal of algebraic relations among gens: the kernel of tag_i -> gens[i],
// returned in the fresh tag ring.
Ideal relation_ideal(const std::vector<Polynomial>& gens,
                     const std::vector<std::string>& tag_names = {},
                     StepBudget* budget = nullptr);

// Does f vanish on the zero locus of the ideal? Implemented as the
// Rabinowitsch test: 1 lies in I + (1 - t f).
bool radical_membership(const Polynomial& f, const Ideal& ideal, StepBudget* budget = nullptr);

// Default tag names y1, ..., yk used when none are supplied.
std::vector<std::string> default_tag_names(std::size_t count);

}  // namespace ngit
