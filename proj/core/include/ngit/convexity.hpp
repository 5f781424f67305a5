#pragma once

#include <vector>

#include "ngit/rational.hpp"

namespace ngit {

using Point = std::vector<Rational>;

// Exact tests for the position of the origin relative to the convex hull of a
// finite point set in Q^r. All points must share one dimension r >= 1.
//
// Membership is decided by Caratheodory reduction: the origin lies in the
// hull iff some affinely independent subset of at most r + 1 points carries a
// convex combination equal to zero, and each candidate subset is checked by
// exact Gaussian elimination.
bool zero_in_convex_hull(const std::vector<Point>& pts);

// The origin is interior iff no nonzero linear functional is nonnegative on
// every point. Candidate functionals are normals to spans of r - 1 points
// (the extreme rays of the dual cone), plus any vector orthogonal to the span
// when the points do not span Q^r.
bool zero_in_interior(const std::vector<Point>& pts);

}  // namespace ngit
