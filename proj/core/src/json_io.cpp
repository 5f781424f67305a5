#include "ngit/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace ngit {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("parse error: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& e : j) {
    if (!e.is_string()) bad(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Json terms_to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const Term& t : f.terms()) {
    Json jt = Json::object();
    jt["num"] = t.coeff.numerator().get_str();
    jt["den"] = t.coeff.denominator().get_str();
    Json exp = Json::array();
    for (std::size_t i = 0; i < t.mono.arity(); ++i) exp.push_back(t.mono.exponent(i));
    jt["exp"] = std::move(exp);
    terms.push_back(std::move(jt));
  }
  return terms;
}

Integer integer_from_json(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a decimal string");
  const std::string s = j.get<std::string>();
  if (s.empty()) bad(std::string(what) + " must be a decimal string");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) bad(std::string(what) + " must be a decimal string");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') bad(std::string(what) + " must be a decimal string");
  return Integer(s);
}

Polynomial terms_from_json(const Json& terms, const RingPtr& ring) {
  if (!terms.is_array()) bad("\"terms\" must be an array");
  std::vector<Term> out;
  for (const Json& jt : terms) {
    Integer num = integer_from_json(field(jt, "num"), "\"num\"");
    Integer den = integer_from_json(field(jt, "den"), "\"den\"");
    if (sgn(den) <= 0) bad("\"den\" must be positive");
    const Json& exp = field(jt, "exp");
    if (!exp.is_array() || exp.size() != ring->size())
      bad("\"exp\" must list one exponent per variable");
    std::vector<std::uint32_t> exps;
    for (const Json& e : exp) {
      if (!e.is_number_unsigned()) bad("exponents must be nonnegative integers");
      std::uint64_t v = e.get<std::uint64_t>();
      if (v > 0xffffffffULL) bad("exponent out of range");
      exps.push_back(static_cast<std::uint32_t>(v));
    }
    out.push_back({Monomial(std::move(exps)), Rational(num, den)});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

RingPtr ring_from_json(const Json& vars, const char* what) {
  std::vector<std::string> names = string_list(vars, what);
  if (names.empty()) bad(std::string(what) + " must not be empty");
  try {
    return make_ring(std::move(names));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

// Accepts either an expression string or a {"terms": [...]} object.
Polynomial polynomial_value(const Json& j, const RingPtr& ring) {
  if (j.is_string()) {
    try {
      return parse_polynomial(ring, j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
  }
  if (j.is_object()) return terms_from_json(field(j, "terms"), ring);
  bad("polynomial must be an expression string or a terms object");
}

std::vector<std::uint64_t> weight_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of positive integers");
  std::vector<std::uint64_t> out;
  for (const Json& e : j) {
    if (!e.is_number_unsigned() || e.get<std::uint64_t>() == 0)
      bad(std::string(what) + " must be an array of positive integers");
    out.push_back(e.get<std::uint64_t>());
  }
  return out;
}

std::string dump(const Json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string polynomial_to_json(const Polynomial& f, int indent) {
  Json j = Json::object();
  j["vars"] = f.ring()->names();
  j["terms"] = terms_to_json(f);
  return dump(j, indent);
}

Polynomial polynomial_from_json(const std::string& text) {
  Json j = parse_text(text);
  RingPtr ring = ring_from_json(field(j, "vars"), "\"vars\"");
  return terms_from_json(field(j, "terms"), ring);
}

Polynomial polynomial_from_json(const std::string& text, const RingPtr& ring) {
  Json j = parse_text(text);
  if (string_list(field(j, "vars"), "\"vars\"") != ring->names())
    bad("variable list does not match the expected ring");
  return terms_from_json(field(j, "terms"), ring);
}

std::string polynomials_to_json(const RingPtr& ring, const std::vector<Polynomial>& polys,
                                int indent) {
  if (!ring) bad("null ring");
  Json j = Json::object();
  j["vars"] = ring->names();
  Json list = Json::array();
  for (const Polynomial& f : polys) {
    if (!same_ring(f.ring(), ring)) bad("polynomial outside the shared ring");
    Json entry = Json::object();
    entry["terms"] = terms_to_json(f);
    list.push_back(std::move(entry));
  }
  j["polys"] = std::move(list);
  return dump(j, indent);
}

std::pair<RingPtr, std::vector<Polynomial>> polynomials_from_json(const std::string& text) {
  Json j = parse_text(text);
  RingPtr ring = ring_from_json(field(j, "vars"), "\"vars\"");
  const Json& list = field(j, "polys");
  if (!list.is_array()) bad("\"polys\" must be an array");
  std::vector<Polynomial> out;
  for (const Json& e : list) out.push_back(terms_from_json(field(e, "terms"), ring));
  return {std::move(ring), std::move(out)};
}

std::string series_to_json(const TruncatedIntegerSeries& s, int indent) {
  Json j = Json::object();
  j["trunc"] = s.trunc();
  j["coeffs"] = s.coeffs();
  return dump(j, indent);
}

TruncatedIntegerSeries series_from_json(const std::string& text) {
  Json j = parse_text(text);
  const Json& jt = field(j, "trunc");
  if (!jt.is_number_unsigned()) bad("\"trunc\" must be a nonnegative integer");
  std::size_t trunc = jt.get<std::size_t>();
  const Json& jc = field(j, "coeffs");
  if (!jc.is_array()) bad("\"coeffs\" must be an array of integers");
  std::vector<long long> coeffs;
  for (const Json& e : jc) {
    if (!e.is_number_integer()) bad("\"coeffs\" must be an array of integers");
    coeffs.push_back(e.get<long long>());
  }
  if (coeffs.size() != trunc + 1) bad("\"coeffs\" must hold trunc + 1 entries");
  return TruncatedIntegerSeries::from_coeffs(trunc, std::move(coeffs));
}

std::string verdict_to_json(StabilityVerdict v) { return Json(to_string(v)).dump(); }

StabilityVerdict verdict_from_json(const std::string& text) {
  Json j = parse_text(text);
  if (!j.is_string()) bad("verdict must be a string");
  const std::string s = j.get<std::string>();
  for (StabilityVerdict v : {StabilityVerdict::Stable, StabilityVerdict::StrictlySemistable,
                             StabilityVerdict::Unstable})
    if (s == to_string(v)) return v;
  bad("unknown verdict \"" + s + "\"");
}

std::string derivation_to_json(const LocallyNilpotentDerivation& d, int indent) {
  Json j = Json::object();
  j["vars"] = d.ring()->names();
  Json images = Json::object();
  for (std::size_t i = 0; i < d.ring()->size(); ++i)
    if (!d.images()[i].is_zero()) images[d.ring()->name(i)] = d.images()[i].str();
  j["images"] = std::move(images);
  return dump(j, indent);
}

LocallyNilpotentDerivation derivation_from_json(const std::string& text) {
  Json j = parse_text(text);
  RingPtr ring = ring_from_json(field(j, "vars"), "\"vars\"");
  const Json& images = field(j, "images");
  if (!images.is_object()) bad("\"images\" must map variable names to polynomials");
  std::vector<Polynomial> imgs(ring->size(), Polynomial::zero(ring));
  for (auto it = images.begin(); it != images.end(); ++it) {
    auto idx = ring->index_of(it.key());
    if (!idx) bad("image given for unknown variable \"" + it.key() + "\"");
    imgs[*idx] = polynomial_value(it.value(), ring);
  }
  return LocallyNilpotentDerivation(std::move(ring), std::move(imgs));
}

std::string substitution_to_json(const SubstitutionSpec& spec, int indent) {
  const SubstitutionAutomorphism& s = spec.substitution;
  if (spec.weights.size() != s.var_ring()->size())
    bad("one weight per variable required");
  Json j = Json::object();
  j["vars"] = s.var_ring()->names();
  j["weights"] = spec.weights;
  j["params"] = s.param_ring()->names();
  Json images = Json::object();
  for (std::size_t i = 0; i < s.var_ring()->size(); ++i)
    images[s.var_ring()->name(i)] = s.images()[i].str();
  j["images"] = std::move(images);
  return dump(j, indent);
}

SubstitutionSpec substitution_from_json(const std::string& text) {
  Json j = parse_text(text);
  RingPtr vars = ring_from_json(field(j, "vars"), "\"vars\"");
  std::vector<std::uint64_t> weights = weight_list(field(j, "weights"), "\"weights\"");
  if (weights.size() != vars->size()) bad("one weight per variable required");
  RingPtr params = ring_from_json(field(j, "params"), "\"params\"");
  RingPtr combined = extend_ring(vars, params->names());
  const Json& images = field(j, "images");
  if (!images.is_object()) bad("\"images\" must map variable names to polynomials");
  std::vector<Polynomial> imgs(vars->size(), Polynomial::zero(combined));
  std::vector<bool> seen(vars->size(), false);
  for (auto it = images.begin(); it != images.end(); ++it) {
    auto idx = vars->index_of(it.key());
    if (!idx) bad("image given for unknown variable \"" + it.key() + "\"");
    imgs[*idx] = polynomial_value(it.value(), combined);
    seen[*idx] = true;
  }
  for (std::size_t i = 0; i < vars->size(); ++i)
    if (!seen[i]) bad("missing image for variable \"" + vars->name(i) + "\"");
  try {
    return {std::move(weights),
            SubstitutionAutomorphism(std::move(vars), std::move(params), std::move(imgs))};
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

std::string presentation_to_json(const SubalgebraPresentation& p, int indent) {
  if (p.generators.empty()) bad("presentation without generators");
  Json j = Json::object();
  j["vars"] = p.generators.front().ring()->names();
  j["tags"] = p.tag_ring->names();
  j["degrees"] = p.degrees;
  Json gens = Json::array();
  for (const Polynomial& g : p.generators) gens.push_back(g.str());
  j["generators"] = std::move(gens);
  Json rels = Json::array();
  for (const Polynomial& r : p.relations.generators()) rels.push_back(r.str());
  j["relations"] = std::move(rels);
  return dump(j, indent);
}

SubalgebraPresentation presentation_from_json(const std::string& text) {
  Json j = parse_text(text);
  RingPtr vars = ring_from_json(field(j, "vars"), "\"vars\"");
  RingPtr tags = ring_from_json(field(j, "tags"), "\"tags\"");
  std::vector<std::uint64_t> degrees = weight_list(field(j, "degrees"), "\"degrees\"");
  const Json& jg = field(j, "generators");
  if (!jg.is_array()) bad("\"generators\" must be an array");
  std::vector<Polynomial> gens;
  for (const Json& e : jg) gens.push_back(polynomial_value(e, vars));
  if (degrees.size() != gens.size()) bad("one degree per generator required");
  if (tags->size() != gens.size()) bad("one tag per generator required");
  const Json& jr = field(j, "relations");
  if (!jr.is_array()) bad("\"relations\" must be an array");
  std::vector<Polynomial> rels;
  for (const Json& e : jr) rels.push_back(polynomial_value(e, tags));
  return {std::move(gens), std::move(degrees), tags, Ideal(tags, std::move(rels))};
}

std::string matrix_to_json(const ParamMatrix& m, int indent) {
  Json j = Json::object();
  j["params"] = m.param_ring->names();
  Json rows = Json::array();
  for (const std::vector<Polynomial>& row : m.entries) {
    Json jr = Json::array();
    for (const Polynomial& e : row) jr.push_back(e.str());
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return dump(j, indent);
}

ParamMatrix matrix_from_json(const std::string& text) {
  Json j = parse_text(text);
  RingPtr params = ring_from_json(field(j, "params"), "\"params\"");
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || rows.empty()) bad("\"rows\" must be a nonempty array");
  std::vector<std::vector<Polynomial>> entries;
  for (const Json& jr : rows) {
    if (!jr.is_array() || jr.size() != rows.size()) bad("matrix must be square");
    std::vector<Polynomial> row;
    for (const Json& e : jr) row.push_back(polynomial_value(e, params));
    entries.push_back(std::move(row));
  }
  return {std::move(params), std::move(entries)};
}

}  // namespace ngit
