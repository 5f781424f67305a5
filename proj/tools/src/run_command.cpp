#include "run_command.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "ngit/derivation.hpp"
#include "ngit/groebner.hpp"
#include "ngit/json_io.hpp"
#include "ngit/linrep.hpp"
#include "ngit/series.hpp"
#include "ngit/stability.hpp"

namespace ngit_cli {

namespace {

using namespace ngit;
using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument(what); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(sep, pos);
    if (end == std::string::npos) end = text.size();
    out.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

long long parse_integer(const std::string& s, const std::string& what) {
  if (s.empty()) malformed(what + ": empty number");
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    malformed(what + ": bad number \"" + s + "\"");
  }
  if (used != s.size()) malformed(what + ": bad number \"" + s + "\"");
  return v;
}

// "2;2;0" or "1,0;0,1;-1,-1": vectors separated by ';', components by ','.
TorusWeightSet parse_torus_weights(const std::string& text) {
  TorusWeightSet w;
  if (text.empty()) malformed("--weights: empty");
  for (const std::string& entry : split(text, ';')) {
    std::vector<long long> vec;
    for (const std::string& comp : split(entry, ','))
      vec.push_back(parse_integer(comp, "--weights"));
    if (w.weights.empty()) w.rank = vec.size();
    if (vec.size() != w.rank) malformed("--weights: vectors of unequal rank");
    w.weights.push_back(std::move(vec));
  }
  return w;
}

SupportPattern parse_support(const std::string& text, std::size_t count) {
  SupportPattern s;
  if (text.empty()) {
    for (std::size_t i = 0; i < count; ++i) s.indices.push_back(i);
    return s;
  }
  for (const std::string& entry : split(text, ',')) {
    long long idx = parse_integer(entry, "--support");
    if (idx < 0 || static_cast<std::size_t>(idx) >= count)
      malformed("--support: index " + entry + " out of range");
    s.indices.push_back(static_cast<std::size_t>(idx));
  }
  return s;
}

std::vector<std::uint64_t> parse_grading_weights(const std::string& text) {
  std::vector<std::uint64_t> w;
  for (const std::string& entry : split(text, ',')) {
    long long v = parse_integer(entry, "--weights");
    if (v <= 0) malformed("--weights: grading weights must be positive");
    w.push_back(static_cast<std::uint64_t>(v));
  }
  return w;
}

std::string render_series(const TruncatedIntegerSeries& s, OutputMode mode) {
  if (mode == OutputMode::Json) return series_to_json(s);
  // Two columns: degree and Betti number, even degrees through the last
  // nonzero one (odd rows appear only if a coefficient is nonzero there).
  std::string out;
  long long top = s.degree();
  for (long long d = 0; d <= top; ++d) {
    if (d % 2 != 0 && s.coeff(static_cast<std::size_t>(d)) == 0) continue;
    out += std::to_string(d) + " " + std::to_string(s.coeff(static_cast<std::size_t>(d))) + "\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

std::string render_bool(bool v, OutputMode mode) {
  if (mode == OutputMode::Json) return v ? "true" : "false";
  return v ? "yes" : "no";
}

std::string render_verdict(StabilityVerdict v, OutputMode mode) {
  return mode == OutputMode::Json ? verdict_to_json(v) : to_string(v);
}

std::string render_presentation(const SubalgebraPresentation& pres, OutputMode mode) {
  if (mode == OutputMode::Json) return presentation_to_json(pres);
  std::string out;
  for (std::size_t i = 0; i < pres.generators.size(); ++i)
    out += pres.tag_ring->name(i) + " (degree " + std::to_string(pres.degrees[i]) +
           "): " + pres.generators[i].str() + "\n";
  for (const Polynomial& r : pres.relations.generators()) out += "relation: " + r.str() + "\n";
  if (!out.empty()) out.pop_back();
  return out;
}

std::string render_polynomials(const RingPtr& ring, const std::vector<Polynomial>& polys,
                               OutputMode mode) {
  if (mode == OutputMode::Json) return polynomials_to_json(ring, polys);
  std::string out;
  for (const Polynomial& f : polys) out += f.str() + "\n";
  if (!out.empty()) out.pop_back();
  return out;
}

std::string render_matrix(const ParamMatrix& m, OutputMode mode) {
  if (mode == OutputMode::Json) return matrix_to_json(m);
  std::string out;
  for (const auto& row : m.entries) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ", ";
      out += row[c].str();
    }
    out += "\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

SubstitutionSpec load_substitution(const Command& c) {
  if (c.map_source.empty()) malformed("--map: empty substitution description");
  SubstitutionSpec spec = substitution_from_json(c.map_source);
  if (!c.weights.empty() && parse_grading_weights(c.weights) != spec.weights)
    malformed("--weights disagrees with the weights in the substitution description");
  return spec;
}

LinearizationPair linearization(const Command& c) {
  if (c.p == 0 || c.q == 0) malformed("--p and --q must be at least one");
  return {c.p, c.q};
}

PointConfiguration configuration(const Command& c) {
  return PointConfiguration::parse(c.points);
}

RunReport dispatch(const Command& c, StepBudget& budget) {
  RunReport rep;

  if (c.name == "invariants") {
    SubalgebraPresentation pres = invariant_presentation(c.n, &budget);
    rep.payload = render_presentation(pres, c.mode);
  } else if (c.name == "nullcone") {
    Ideal locus = nullcone_check(c.n, &budget);
    rep.payload = render_polynomials(locus.ring(), locus.generators(), c.mode);
  } else if (c.name == "stability torus") {
    TorusWeightSet w = parse_torus_weights(c.weights);
    SupportPattern s = parse_support(c.support, w.weights.size());
    rep.payload = render_verdict(torus_status(w, s), c.mode);
  } else if (c.name == "stability config") {
    PointConfiguration cfg = configuration(c);
    if (cfg.total() != c.n)
      malformed("--n is " + std::to_string(c.n) + " but the configuration totals " +
                std::to_string(cfg.total()));
    LinearizationPair lin = linearization(c);
    StabilityVerdict criterion = config_status(cfg, lin);
    StabilityVerdict oracle = config_status_oracle(cfg, lin);
    bool agree = criterion == oracle;
    if (!agree) {
      rep.exit_code = 3;
      rep.diagnostics = "criterion " + to_string(criterion) + " but oracle " + to_string(oracle);
      return rep;
    }
    if (c.mode == OutputMode::Json) {
      Json j = Json::object();
      j["criterion"] = to_string(criterion);
      j["oracle"] = to_string(oracle);
      j["agree"] = true;
      rep.payload = j.dump();
    } else {
      rep.payload = "criterion: " + to_string(criterion) + "\noracle: " + to_string(oracle) +
                    "\nagree: yes";
    }
  } else if (c.name == "stability gstatus") {
    rep.payload = render_verdict(g_status_binary_forms(configuration(c)), c.mode);
  } else if (c.name == "fg-check") {
    rep.payload = render_bool(boundary_unstable(c.n, linearization(c)), c.mode);
  } else if (c.name == "poincare") {
    TruncatedIntegerSeries s{0};
    if (c.selector.empty()) {
      if (c.n % 2 == 0)
        malformed("even --n needs an explicit series: --intersection, --partial or --stable");
      s = poincare_quotient_odd(c.n);
    } else if (c.selector == "intersection") {
      s = intersection_poincare(c.n);
    } else if (c.selector == "partial") {
      s = poincare_partial_desing(c.n);
    } else if (c.selector == "stable") {
      s = poincare_stable_quotient(c.n);
    } else if (c.selector == "gquotient") {
      s = poincare_binary_quotient(c.n);
    } else {
      malformed("unknown series selector \"" + c.selector + "\"");
    }
    rep.payload = render_series(s, c.mode);
  } else if (c.name == "represent") {
    SubstitutionSpec spec = load_substitution(c);
    if (c.degree == 0) malformed("--degree must be positive");
    GradedMonomialBasis b =
        monomial_basis(spec.substitution.var_ring(), spec.weights, c.degree);
    rep.payload = render_matrix(substitution_matrix(spec.substitution, b), c.mode);
  } else if (c.name == "grouplaw") {
    SubstitutionSpec spec = load_substitution(c);
    std::uint64_t degree = c.degree;
    if (degree == 0)
      degree = std::accumulate(spec.weights.begin(), spec.weights.end(), std::uint64_t{1},
                               [](std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); });
    GradedMonomialBasis b =
        monomial_basis(spec.substitution.var_ring(), spec.weights, degree);
    rep.payload = render_bool(group_law_check(spec.substitution, b), c.mode);
  } else {
    malformed("unknown command \"" + c.name + "\"");
  }
  return rep;
}

}  // namespace

RunReport run_command(const Command& c) {
  StepBudget budget(c.budget ? c.budget : kDefaultStepLimit);
  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  try {
    rep = dispatch(c, budget);
  } catch (const BudgetExceeded& e) {
    rep = RunReport{2, "", e.what()};
  } catch (const std::exception& e) {
    rep = RunReport{1, "", e.what()};
  }
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  if (!rep.diagnostics.empty()) rep.diagnostics += "\n";
  rep.diagnostics += "time: " + std::to_string(elapsed.count()) +
                     " ms, budget used: " + std::to_string(budget.used);
  return rep;
}

}  // namespace ngit_cli
