#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ngit/derivation.hpp"
#include "ngit/linrep.hpp"
#include "ngit/polynomial.hpp"
#include "ngit/series.hpp"
#include "ngit/stability.hpp"

namespace ngit {

// JSON text converters for every payload the command line tool emits or
// consumes.  All output is deterministic: object keys appear in a fixed
// order and arrays follow the canonical orders of the underlying types.
// Coefficients are serialized as decimal strings so no magnitude is lost.
// Every *_from_json throws std::invalid_argument on malformed text.

// {"vars": [...], "terms": [{"num": "...", "den": "...", "exp": [...]}]}
// with terms in descending graded reverse lexicographic order.
std::string polynomial_to_json(const Polynomial& f, int indent = -1);
Polynomial polynomial_from_json(const std::string& text);
// Same physical format but the variable list must match `ring`.
Polynomial polynomial_from_json(const std::string& text, const RingPtr& ring);

// {"vars": [...], "polys": [{"terms": [...]}, ...]} sharing one variable list.
std::string polynomials_to_json(const RingPtr& ring, const std::vector<Polynomial>& polys,
                                int indent = -1);
std::pair<RingPtr, std::vector<Polynomial>> polynomials_from_json(const std::string& text);

// {"trunc": N, "coeffs": [c0, ..., cN]}
std::string series_to_json(const TruncatedIntegerSeries& s, int indent = -1);
TruncatedIntegerSeries series_from_json(const std::string& text);

// "stable" | "strictly-semistable" | "unstable" (bare JSON string)
std::string verdict_to_json(StabilityVerdict v);
StabilityVerdict verdict_from_json(const std::string& text);

// {"vars": [...], "images": {"x0": "<expression>", ...}}; expressions use the
// parse_polynomial grammar and may also be given in the polynomial term
// format as an object without "vars".
std::string derivation_to_json(const LocallyNilpotentDerivation& d, int indent = -1);
LocallyNilpotentDerivation derivation_from_json(const std::string& text);

// A parameterized substitution family together with the grading data the
// representation routines need.
struct SubstitutionSpec {
  std::vector<std::uint64_t> weights;  // one per variable of the family
  SubstitutionAutomorphism substitution;
};

// {"vars": [...], "weights": [...], "params": [...], "images": {...}};
// image expressions may use both variables and parameters.
std::string substitution_to_json(const SubstitutionSpec& spec, int indent = -1);
SubstitutionSpec substitution_from_json(const std::string& text);

// {"vars": [...], "tags": [...], "degrees": [...], "generators": [...],
//  "relations": [...]} with generators over vars and relations over tags,
// both as expression strings.
std::string presentation_to_json(const SubalgebraPresentation& p, int indent = -1);
SubalgebraPresentation presentation_from_json(const std::string& text);

// {"params": [...], "rows": [["<expression>", ...], ...]} row-major.
std::string matrix_to_json(const ParamMatrix& m, int indent = -1);
ParamMatrix matrix_from_json(const std::string& text);

}  // namespace ngit
