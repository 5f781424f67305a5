#pragma once

#include <cstdint>
#include <vector>

#include "ngit/groebner.hpp"
#include "ngit/polynomial.hpp"

namespace ngit {

// Derivation of a polynomial ring, determined by the images of the variables
// and extended by linearity and the Leibniz rule.
class LocallyNilpotentDerivation {
 public:
  LocallyNilpotentDerivation(RingPtr ring, std::vector<Polynomial> images);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> images_;
};

Polynomial apply_derivation(const LocallyNilpotentDerivation& d, const Polynomial& f);

// Per-variable nilpotency indices: the smallest k with D^k(x_i) = 0. Kernel
// variables have index one.
struct LNDCertificate {
  std::vector<unsigned> index;
};

struct NilpotencyResult {
  bool nilpotent = false;
  LNDCertificate certificate;     // meaningful when nilpotent
  std::size_t failed_variable = 0;  // meaningful when not: first variable past the bound
};

// Iterates the derivation on every variable up to the bound. A failure does
// not prove non-nilpotency; it only reports the first variable whose iterates
// did not reach zero within the bound.
NilpotencyResult is_locally_nilpotent(const LocallyNilpotentDerivation& d, unsigned bound);

// The triangular derivation x_0 -> 0, x_i -> i x_{i-1} on x_0, ..., x_n.
LocallyNilpotentDerivation weitzenboeck(unsigned n);

// Value of the localizing kernel map on one variable, as a fraction whose
// denominator is a power of the slice denominator.
struct DixmierImage {
  Polynomial numerator;
  unsigned denominator_power = 0;
};

// pi(x) = sum_k (-s)^k D^k(x) / k!  with s = slice_num / slice_den. Requires
// D(slice_den) = 0 and D(slice_num) = slice_den; the result is annihilated by
// the derivation extended to the localization at slice_den.
DixmierImage dixmier_map(const LocallyNilpotentDerivation& d, std::size_t slice_num,
                         const Polynomial& slice_den, std::size_t x);

// Generating set of the kernel subalgebra, computed from the localized
// presentation and certified by iterated colon extraction: starting from the
// cleared-denominator images of the variables plus the slice denominator a,
// each round finds every kernel element h with a h in the current subalgebra
// and adjoins the new ones; stabilization proves the subalgebra is the whole
// kernel. Output is content-free, minimal (no member generates in the
// others), and sorted by ascending degree. Requires a variable v with
// D(v) != 0 and D(D(v)) = 0; a derivation that is identically zero returns
// the variables themselves.
std::vector<Polynomial> kernel_generators(const LocallyNilpotentDerivation& d,
                                          StepBudget* budget = nullptr);

// Graded presentation of an invariant subalgebra: generators with their
// degrees (the weighted projective ambient) and the ideal of relations among
// them in the tag variables y0, y1, ...
struct SubalgebraPresentation {
  std::vector<Polynomial> generators;
  std::vector<std::uint64_t> degrees;
  RingPtr tag_ring;
  Ideal relations;
};

// Presentation of the kernel of the triangular derivation on binary forms of
// degree n. Supported through the step budget; n <= 4 is certified by tests.
SubalgebraPresentation invariant_presentation(unsigned n, StepBudget* budget = nullptr);

// Smallest set of variables whose vanishing locus equals the common zero
// locus of all kernel generators, verified in both directions by radical
// membership. Throws if the locus is not a coordinate subspace.
Ideal nullcone_check(unsigned n, StepBudget* budget = nullptr);

}  // namespace ngit
