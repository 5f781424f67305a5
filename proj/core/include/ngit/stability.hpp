#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ngit/rational.hpp"

namespace ngit {

enum class StabilityVerdict { Stable, StrictlySemistable, Unstable };

// "stable" | "strictly-semistable" | "unstable"
std::string to_string(StabilityVerdict v);

inline bool semistable(StabilityVerdict v) { return v != StabilityVerdict::Unstable; }

// Diagonal torus action data: one integer weight vector per homogeneous
// coordinate, all of the stated rank.
struct TorusWeightSet {
  std::size_t rank = 0;
  std::vector<std::vector<long long>> weights;
};

// Nonempty set of coordinate indices that are nonzero at the point under test.
struct SupportPattern {
  std::vector<std::size_t> indices;
};

// Verdict for a point with the given support: Stable iff the origin is
// interior to the convex hull of the supported weight vectors (interior taken
// in the full rank-dimensional space), StrictlySemistable iff the origin lies
// on the hull but not inside, Unstable iff it lies outside.
StabilityVerdict torus_status(const TorusWeightSet& w, const SupportPattern& s);

// Point of the projective line with exact rational homogeneous coordinates,
// held canonically as (a, 1) or (1, 0).
class ProjectiveLinePoint {
 public:
  ProjectiveLinePoint(Rational a, Rational b);
  static ProjectiveLinePoint infinity() { return ProjectiveLinePoint(Rational(1), Rational(0)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_infinity() const { return b_.is_zero(); }

  friend bool operator==(const ProjectiveLinePoint& x, const ProjectiveLinePoint& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const ProjectiveLinePoint& x, const ProjectiveLinePoint& y) {
    return !(x == y);
  }
  // Deterministic total order: infinity first, then by the affine coordinate.
  friend bool operator<(const ProjectiveLinePoint& x, const ProjectiveLinePoint& y);

  std::string str() const;  // "a:b" with the canonical representative

 private:
  Rational a_, b_;
};

// Unordered configuration of points with positive multiplicities.
class PointConfiguration {
 public:
  PointConfiguration() = default;

  void add(const ProjectiveLinePoint& p, unsigned mult = 1);

  unsigned total() const { return total_; }
  unsigned multiplicity(const ProjectiveLinePoint& p) const;
  unsigned max_multiplicity() const;
  const std::map<ProjectiveLinePoint, unsigned>& entries() const { return entries_; }

  // Grammar: comma-separated "a:b^m" entries; "^m" optional and defaults to
  // one; a and b are exact rationals. Example: "1:0^2,1:1".
  static PointConfiguration parse(const std::string& text);
  std::string str() const;

 private:
  std::map<ProjectiveLinePoint, unsigned> entries_;
  unsigned total_ = 0;
};

// Ample line bundle parameters (p on the configuration factor, q on the
// plane factor), both at least one.
struct LinearizationPair {
  unsigned long p = 1;
  unsigned long q = 1;
};

// Combinatorial criterion: Stable iff the maximal multiplicity anywhere is
// below n/2 + q/p and the multiplicity at infinity is below n/2; Unstable iff
// either bound is exceeded strictly; StrictlySemistable on equality cases.
StabilityVerdict config_status(const PointConfiguration& c, const LinearizationPair& lin);

// Independent verdict by exhausting candidate destabilizing directions:
// ordered pairs of distinct points drawn from the support and both torus
// fixed points, each inducing a one-dimensional weight interval
// [p(2m_- - n) + q b_min, p(n - 2m_+) + q b_max] whose position against zero
// is decided exactly.
StabilityVerdict config_status_oracle(const PointConfiguration& c, const LinearizationPair& lin);

// Classical verdict for the configuration alone: Stable iff the maximal
// multiplicity is below n/2, Unstable iff above, StrictlySemistable at n/2.
StabilityVerdict g_status_binary_forms(const PointConfiguration& c);

// True iff every point of the boundary divisor (plane at infinity times the
// configuration space) is unstable for the (p, q) linearization. Decided by
// the closed form q/p > n, which boundary_unstable_oracle certifies for each
// n. Requires n >= 2: the one-point problem genuinely disagrees with the
// closed form (a fixed pair of distinct points is a torus fixed point with
// single weight p - q, unstable whenever p != q).
bool boundary_unstable(unsigned n, const LinearizationPair& lin);

// Exhaustive check over all coincidence types of boundary points: every
// multiplicity partition of n, every position of the plane direction
// (coinciding with a cluster or fresh), every count of unoccupied torus fixed
// points. Each type is tested with the candidate-direction hull test.
bool boundary_unstable_oracle(unsigned n, const LinearizationPair& lin);

}  // namespace ngit
