#include "ngit/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "ngit/convexity.hpp"

namespace ngit {

std::string to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::Stable: return "stable";
    case StabilityVerdict::StrictlySemistable: return "strictly-semistable";
    case StabilityVerdict::Unstable: return "unstable";
  }
  throw std::logic_error("unreachable verdict");
}

StabilityVerdict torus_status(const TorusWeightSet& w, const SupportPattern& s) {
  if (w.rank == 0) throw std::invalid_argument("torus_status: rank must be positive");
  if (w.weights.empty()) throw std::invalid_argument("torus_status: no weights");
  for (const auto& v : w.weights)
    if (v.size() != w.rank) throw std::invalid_argument("torus_status: weight of wrong rank");
  if (s.indices.empty()) throw std::invalid_argument("torus_status: empty support");

  std::vector<Point> pts;
  for (std::size_t i : s.indices) {
    if (i >= w.weights.size()) throw std::invalid_argument("torus_status: support index out of range");
    Point p;
    p.reserve(w.rank);
    for (long long c : w.weights[i]) p.push_back(Rational(static_cast<long>(c)));
    pts.push_back(std::move(p));
  }
  if (zero_in_interior(pts)) return StabilityVerdict::Stable;
  if (zero_in_convex_hull(pts)) return StabilityVerdict::StrictlySemistable;
  return StabilityVerdict::Unstable;
}

ProjectiveLinePoint::ProjectiveLinePoint(Rational a, Rational b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("projective point: both coordinates zero");
  if (b.is_zero()) {
    a_ = Rational(1);
    b_ = Rational(0);
  } else {
    a_ = a / b;
    b_ = Rational(1);
  }
}

bool operator<(const ProjectiveLinePoint& x, const ProjectiveLinePoint& y) {
  if (x.is_infinity() != y.is_infinity()) return x.is_infinity();
  if (x.is_infinity()) return false;
  return x.a_ < y.a_;
}

std::string ProjectiveLinePoint::str() const { return a_.str() + ":" + b_.str(); }

void PointConfiguration::add(const ProjectiveLinePoint& p, unsigned mult) {
  if (mult == 0) throw std::invalid_argument("configuration: zero multiplicity");
  auto [it, fresh] = entries_.emplace(p, mult);
  if (!fresh) it->second += mult;
  total_ += mult;
}

unsigned PointConfiguration::multiplicity(const ProjectiveLinePoint& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? 0 : it->second;
}

unsigned PointConfiguration::max_multiplicity() const {
  unsigned best = 0;
  for (const auto& [p, m] : entries_) best = std::max(best, m);
  return best;
}

PointConfiguration PointConfiguration::parse(const std::string& text) {
  PointConfiguration c;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("configuration \"" + text + "\": " + why);
  };
  if (!text.empty() && text.back() == ',') fail("trailing comma");
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string entry = text.substr(pos, end - pos);
    pos = end + 1;

    unsigned long mult = 1;
    std::size_t caret = entry.find('^');
    if (caret != std::string::npos) {
      std::size_t used = 0;
      const std::string digits = entry.substr(caret + 1);
      try {
        mult = std::stoul(digits, &used);
      } catch (const std::exception&) {
        fail("bad multiplicity");
      }
      if (used != digits.size() || mult == 0) fail("bad multiplicity");
      entry.resize(caret);
    }
    std::size_t colon = entry.find(':');
    if (colon == std::string::npos) fail("entry lacks ':'");
    try {
      Rational a = Rational::from_string(entry.substr(0, colon));
      Rational b = Rational::from_string(entry.substr(colon + 1));
      c.add(ProjectiveLinePoint(a, b), static_cast<unsigned>(mult));
    } catch (const std::invalid_argument&) {
      fail("bad coordinates");
    }
  }
  if (c.total() == 0) throw std::invalid_argument("configuration: empty");
  return c;
}

std::string PointConfiguration::str() const {
  std::string out;
  for (const auto& [p, m] : entries_) {
    if (!out.empty()) out += ",";
    out += p.str();
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

namespace {

void require_linearization(const LinearizationPair& lin) {
  if (lin.p == 0 || lin.q == 0) throw std::invalid_argument("linearization: p, q must be positive");
}

}  // namespace

StabilityVerdict config_status(const PointConfiguration& c, const LinearizationPair& lin) {
  require_linearization(lin);
  if (c.total() == 0) throw std::invalid_argument("config_status: empty configuration");
  Integer n(c.total());
  Integer p(static_cast<unsigned long>(lin.p)), q(static_cast<unsigned long>(lin.q));
  Integer mmax(c.max_multiplicity());
  Integer minf(c.multiplicity(ProjectiveLinePoint::infinity()));

  // m > n/2 + q/p  <=>  2 p m > p n + 2 q; m > n/2  <=>  2 m > n.
  Integer lhs = 2 * p * mmax;
  Integer rhs = p * n + 2 * q;
  if (lhs > rhs || 2 * minf > n) return StabilityVerdict::Unstable;
  if (lhs < rhs && 2 * minf < n) return StabilityVerdict::Stable;
  return StabilityVerdict::StrictlySemistable;
}

StabilityVerdict config_status_oracle(const PointConfiguration& c, const LinearizationPair& lin) {
  require_linearization(lin);
  if (c.total() == 0) throw std::invalid_argument("config_status_oracle: empty configuration");

  std::map<ProjectiveLinePoint, unsigned> cand(c.entries().begin(), c.entries().end());
  cand.emplace(ProjectiveLinePoint::infinity(), 0);
  cand.emplace(ProjectiveLinePoint(Rational(0), Rational(1)), 0);

  Integer n(c.total());
  Integer p(static_cast<unsigned long>(lin.p)), q(static_cast<unsigned long>(lin.q));
  bool touched = false;
  for (const auto& [z1, m1] : cand) {
    for (const auto& [z2, m2] : cand) {
      if (z1 == z2) continue;
      // Plane-factor weights at the transported base point: the zero weight
      // always occurs; +2 is killed exactly when z2 is the attracting fixed
      // point, -2 exactly when z1 is.
      Integer bmin = z1.is_infinity() ? 0 : -2;
      Integer bmax = z2.is_infinity() ? 0 : 2;
      Integer L = p * (2 * Integer(m1) - n) + q * bmin;
      Integer R = p * (n - 2 * Integer(m2)) + q * bmax;
      if (L > 0 || R < 0) return StabilityVerdict::Unstable;
      if (sgn(L) == 0 || sgn(R) == 0) touched = true;
    }
  }
  return touched ? StabilityVerdict::StrictlySemistable : StabilityVerdict::Stable;
}

StabilityVerdict g_status_binary_forms(const PointConfiguration& c) {
  if (c.total() == 0) throw std::invalid_argument("g_status: empty configuration");
  unsigned long long two_max = 2ull * c.max_multiplicity();
  if (two_max > c.total()) return StabilityVerdict::Unstable;
  if (two_max < c.total()) return StabilityVerdict::Stable;
  return StabilityVerdict::StrictlySemistable;
}

bool boundary_unstable(unsigned n, const LinearizationPair& lin) {
  require_linearization(lin);
  if (n < 2) throw std::invalid_argument("boundary_unstable: needs n >= 2");
  return Integer(static_cast<unsigned long>(lin.q)) >
         Integer(static_cast<unsigned long>(lin.p)) * n;
}

namespace {

// One coincidence type of a boundary point: cluster multiplicities, index of
// the cluster carrying the plane direction (clusters.size() when the
// direction is fresh), and how many torus fixed points remain unoccupied.
struct BoundaryType {
  std::vector<unsigned> clusters;
  std::size_t zeta;
  unsigned extras;
};

bool type_unstable(const BoundaryType& t, unsigned n, const Integer& p, const Integer& q) {
  struct Cand {
    unsigned mult;
    bool is_zeta;
  };
  std::vector<Cand> cand;
  for (std::size_t i = 0; i < t.clusters.size(); ++i)
    cand.push_back({t.clusters[i], i == t.zeta});
  if (t.zeta == t.clusters.size()) cand.push_back({0, true});
  for (unsigned e = 0; e < t.extras; ++e) cand.push_back({0, false});

  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = 0; j < cand.size(); ++j) {
      if (i == j) continue;
      // Off the zero section only the +1/-1 weights can occur; the direction
      // point kills -1 when it sits at the repelling fixed point and +1 when
      // it sits at the attracting one.
      long bmin = cand[i].is_zeta ? 1 : -1;
      long bmax = cand[j].is_zeta ? -1 : 1;
      Integer L = p * (2 * Integer(cand[i].mult) - Integer(n)) + q * bmin;
      Integer R = p * (Integer(n) - 2 * Integer(cand[j].mult)) + q * bmax;
      if (L > 0 || R < 0) return true;
    }
  }
  return false;
}

template <typename Visit>
void for_each_partition(unsigned n, unsigned max_part, std::vector<unsigned>& acc, Visit visit) {
  if (n == 0) {
    visit(acc);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    acc.push_back(part);
    for_each_partition(n - part, part, acc, visit);
    acc.pop_back();
  }
}

}  // namespace

bool boundary_unstable_oracle(unsigned n, const LinearizationPair& lin) {
  require_linearization(lin);
  if (n < 2) throw std::invalid_argument("boundary_unstable_oracle: needs n >= 2");
  Integer p(static_cast<unsigned long>(lin.p)), q(static_cast<unsigned long>(lin.q));
  bool all_unstable = true;
  std::vector<unsigned> acc;
  for_each_partition(n, n, acc, [&](const std::vector<unsigned>& clusters) {
    for (std::size_t zeta = 0; zeta <= clusters.size(); ++zeta) {
      std::size_t occupied = clusters.size() + (zeta == clusters.size() ? 1 : 0);
      unsigned min_extras = occupied >= 2 ? 0 : static_cast<unsigned>(2 - occupied);
      for (unsigned extras = min_extras; extras <= 2; ++extras) {
        if (!type_unstable({clusters, zeta, extras}, n, p, q)) all_unstable = false;
      }
    }
  });
  return all_unstable;
}

}  // namespace ngit
