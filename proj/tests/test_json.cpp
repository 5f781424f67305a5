#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ngit/json_io.hpp"

using namespace ngit;

namespace {

Polynomial p(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

}  // namespace

TEST_CASE("polynomial json round trip") {
  auto R = make_ring({"x", "y", "z"});
  Polynomial f = p(R, "3*x^2*y - 1/2*z + 7");
  std::string text = polynomial_to_json(f);
  Polynomial back = polynomial_from_json(text);
  CHECK(back == f);
  CHECK(back.ring()->names() == R->names());
  CHECK(polynomial_from_json(text, R) == f);

  // zero polynomial keeps its ring
  std::string ztext = polynomial_to_json(Polynomial::zero(R));
  CHECK(polynomial_from_json(ztext).is_zero());

  // indented output parses the same
  CHECK(polynomial_from_json(polynomial_to_json(f, 2)) == f);

  auto S = make_ring({"x", "y"});
  CHECK_THROWS_AS(polynomial_from_json(text, S), std::invalid_argument);
}

TEST_CASE("polynomial json rejects malformed input") {
  CHECK_THROWS_AS(polynomial_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(polynomial_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(polynomial_from_json(R"({"terms": []})"), std::invalid_argument);
  CHECK_THROWS_AS(polynomial_from_json(R"({"vars": ["x"], "terms": 3})"), std::invalid_argument);
  // exponent vector of the wrong length
  CHECK_THROWS_AS(polynomial_from_json(
                      R"({"vars": ["x", "y"], "terms": [{"num": "1", "den": "1", "exp": [1]}]})"),
                  std::invalid_argument);
  // denominator must be a positive decimal string
  CHECK_THROWS_AS(polynomial_from_json(
                      R"({"vars": ["x"], "terms": [{"num": "1", "den": "0", "exp": [1]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(polynomial_from_json(
                      R"({"vars": ["x"], "terms": [{"num": "1", "den": "-2", "exp": [1]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(polynomial_from_json(
                      R"({"vars": ["x"], "terms": [{"num": "one", "den": "1", "exp": [1]}]})"),
                  std::invalid_argument);
}

TEST_CASE("polynomial list json round trip") {
  auto R = make_ring("x", 3);
  std::vector<Polynomial> polys{p(R, "x0^2 - x1*x2"), p(R, "x1 + 2"), Polynomial::zero(R)};
  std::string text = polynomials_to_json(R, polys);
  auto [ring, back] = polynomials_from_json(text);
  CHECK(ring->names() == R->names());
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == polys[i]);

  CHECK_THROWS_AS(polynomials_from_json(R"({"vars": ["x"]})"), std::invalid_argument);
  CHECK_THROWS_AS(polynomials_from_json(R"({"vars": [], "polys": []})"), std::invalid_argument);
}

TEST_CASE("series json round trip") {
  TruncatedIntegerSeries s = TruncatedIntegerSeries::from_coeffs(4, {1, 0, 2, 0, -3});
  std::string text = series_to_json(s);
  CHECK(series_from_json(text) == s);
  CHECK(series_from_json(series_to_json(s, 2)) == s);

  CHECK_THROWS_AS(series_from_json(R"({"trunc": 2, "coeffs": [1, 0]})"), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(R"({"coeffs": [1]})"), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json("[1, 2]"), std::invalid_argument);
}

TEST_CASE("verdict json names") {
  CHECK(verdict_to_json(StabilityVerdict::Stable) == "\"stable\"");
  CHECK(verdict_to_json(StabilityVerdict::StrictlySemistable) == "\"strictly-semistable\"");
  CHECK(verdict_to_json(StabilityVerdict::Unstable) == "\"unstable\"");
  for (StabilityVerdict v : {StabilityVerdict::Stable, StabilityVerdict::StrictlySemistable,
                             StabilityVerdict::Unstable})
    CHECK(verdict_from_json(verdict_to_json(v)) == v);
  CHECK_THROWS_AS(verdict_from_json("\"semistable\""), std::invalid_argument);
  CHECK_THROWS_AS(verdict_from_json("stable"), std::invalid_argument);
}

TEST_CASE("derivation json round trip") {
  LocallyNilpotentDerivation d = weitzenboeck(3);
  std::string text = derivation_to_json(d);
  LocallyNilpotentDerivation back = derivation_from_json(text);
  CHECK(back.ring()->names() == d.ring()->names());
  CHECK(back.images() == d.images());

  // zero images may be omitted entirely
  LocallyNilpotentDerivation sparse =
      derivation_from_json(R"({"vars": ["x", "y"], "images": {"y": "x"}})");
  CHECK(sparse.image(0).is_zero());
  CHECK(sparse.image(1) == p(sparse.ring(), "x"));

  CHECK_THROWS_AS(derivation_from_json(R"({"vars": ["x"], "images": {"q": "x"}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(derivation_from_json(R"({"vars": ["x"], "images": {"x": "x +"}})"),
                  std::invalid_argument);
}

TEST_CASE("substitution json round trip") {
  auto vars = make_ring({"x", "y", "z"});
  auto params = make_ring({"l", "m", "n"});
  auto C = extend_ring(vars, params->names());
  SubstitutionSpec spec{
      {1, 1, 2},
      SubstitutionAutomorphism(vars, params,
                               {p(C, "x"), p(C, "y"), p(C, "z + l*x^2 + m*x*y + n*y^2")})};
  std::string text = substitution_to_json(spec);
  SubstitutionSpec back = substitution_from_json(text);
  CHECK(back.weights == spec.weights);
  CHECK(back.substitution.var_ring()->names() == vars->names());
  CHECK(back.substitution.param_ring()->names() == params->names());
  CHECK(back.substitution.images() == spec.substitution.images());

  // every variable needs an image here, unlike derivations
  CHECK_THROWS_AS(substitution_from_json(
                      R"({"vars": ["x"], "weights": [1], "params": ["t"], "images": {}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(substitution_from_json(
                      R"({"vars": ["x"], "weights": [1, 2], "params": ["t"],
                          "images": {"x": "x"}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(substitution_from_json(
                      R"({"vars": ["x"], "weights": [0], "params": ["t"],
                          "images": {"x": "x"}})"),
                  std::invalid_argument);
}

TEST_CASE("presentation json round trip") {
  auto R = make_ring({"x"});
  auto T = make_ring({"a", "b"});
  SubalgebraPresentation pres{{p(R, "x^2"), p(R, "x^3")},
                              {2, 3},
                              T,
                              Ideal(T, {p(T, "a^3 - b^2")})};
  std::string text = presentation_to_json(pres);
  SubalgebraPresentation back = presentation_from_json(text);
  CHECK(back.generators == pres.generators);
  CHECK(back.degrees == pres.degrees);
  CHECK(back.tag_ring->names() == T->names());
  CHECK(back.relations.generators() == pres.relations.generators());

  // empty relation list is legal
  SubalgebraPresentation flat{{p(R, "x")}, {1}, make_ring({"y0"}), Ideal(make_ring({"y0"}), {})};
  SubalgebraPresentation flat_back = presentation_from_json(presentation_to_json(flat));
  CHECK(flat_back.relations.generators().empty());

  CHECK_THROWS_AS(presentation_from_json(R"({"vars": ["x"], "tags": ["a"]})"),
                  std::invalid_argument);
}

TEST_CASE("matrix json round trip") {
  auto P = make_ring({"a"});
  ParamMatrix m{P,
                {{p(P, "1"), p(P, "2*a")}, {Polynomial::zero(P), p(P, "a^2 + 1")}}};
  std::string text = matrix_to_json(m);
  ParamMatrix back = matrix_from_json(text);
  CHECK(back.param_ring->names() == P->names());
  CHECK(back == m);
  CHECK(matrix_from_json(matrix_to_json(m, 2)) == m);

  CHECK_THROWS_AS(matrix_from_json(R"({"params": ["a"], "rows": [["1"], ["1", "2"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(R"({"params": ["a"], "rows": [["1 +"]]})"),
                  std::invalid_argument);
}
