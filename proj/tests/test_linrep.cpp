#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ngit/linrep.hpp"

using namespace ngit;

namespace {

Polynomial p(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

// translations of the weighted plane: z picks up a quadric in x, y
SubstitutionAutomorphism weighted_plane_family() {
  auto vars = make_ring({"x", "y", "z"});
  auto params = make_ring({"l", "m", "n"});
  auto C = extend_ring(vars, params->names());
  return SubstitutionAutomorphism(
      vars, params,
      {p(C, "x"), p(C, "y"), p(C, "z + l*x^2 + m*x*y + n*y^2")});
}

// one-parameter projective translations preserving a quadric surface
SubstitutionAutomorphism quadric_line_family() {
  auto vars = make_ring("x", 4);
  auto params = make_ring({"t"});
  auto C = extend_ring(vars, params->names());
  return SubstitutionAutomorphism(vars, params,
                                  {p(C, "x0"), p(C, "x1"), p(C, "x2 + t*x1"),
                                   p(C, "x3 + t*(2*x2 + x0) + t^2*x1")});
}

}  // namespace

TEST_CASE("weighted monomial bases enumerate in descending graded order") {
  auto R = make_ring({"x", "y", "z"});
  GradedMonomialBasis b = monomial_basis(R, {1, 1, 2}, 4);
  REQUIRE(b.monomials.size() == 9);
  std::vector<std::string> got;
  for (const Monomial& m : b.monomials) got.push_back(Polynomial::term(R, m, Rational(1)).str());
  CHECK(got == std::vector<std::string>{"x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4", "x^2*z",
                                        "x*y*z", "y^2*z", "z^2"});

  GradedMonomialBasis lin = monomial_basis(make_ring("x", 4), {1, 1, 1, 1}, 1);
  CHECK(lin.monomials.size() == 4);
  GradedMonomialBasis empty = monomial_basis(R, {1, 1, 2}, 1);
  CHECK(empty.monomials.size() == 2);  // x and y only

  CHECK_THROWS_AS(monomial_basis(R, {1, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(monomial_basis(R, {1, 0, 2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(monomial_basis(R, {1, 1, 2}, 0), std::invalid_argument);
}

TEST_CASE("substitution families validate and compose") {
  auto s = weighted_plane_family();
  CHECK(s.var_ring()->names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(s.param_ring()->names() == std::vector<std::string>{"l", "m", "n"});
  auto C = s.combined_ring();

  // applying to a variable-ring polynomial lands in the combined ring
  Polynomial zimg = s.apply(p(s.var_ring(), "z"));
  CHECK(zimg == p(C, "z + l*x^2 + m*x*y + n*y^2"));
  // parameters pass through composition symbolically
  auto twice = compose(s, s);
  CHECK(twice.images()[2] == p(C, "z + 2*l*x^2 + 2*m*x*y + 2*n*y^2"));

  auto id = SubstitutionAutomorphism::identity(s.var_ring(), s.param_ring());
  CHECK(compose(id, s).images() == s.images());

  CHECK_THROWS_AS(SubstitutionAutomorphism(s.var_ring(), s.param_ring(),
                                           {p(C, "x"), p(C, "y")}),
                  std::invalid_argument);
}

TEST_CASE("matrix of the weighted-plane family on quartics") {
  auto s = weighted_plane_family();
  GradedMonomialBasis b = monomial_basis(s.var_ring(), {1, 1, 2}, 4);
  ParamMatrix M = substitution_matrix(s, b);
  REQUIRE(M.size() == 9);
  auto P = M.param_ring;

  std::vector<std::vector<std::string>> expected{
      {"1", "0", "0", "0", "0", "l", "0", "0", "l^2"},
      {"0", "1", "0", "0", "0", "m", "l", "0", "2*l*m"},
      {"0", "0", "1", "0", "0", "n", "m", "l", "2*l*n + m^2"},
      {"0", "0", "0", "1", "0", "0", "n", "m", "2*m*n"},
      {"0", "0", "0", "0", "1", "0", "0", "n", "n^2"},
      {"0", "0", "0", "0", "0", "1", "0", "0", "2*l"},
      {"0", "0", "0", "0", "0", "0", "1", "0", "2*m"},
      {"0", "0", "0", "0", "0", "0", "0", "1", "2*n"},
      {"0", "0", "0", "0", "0", "0", "0", "0", "1"}};
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(M.entries[r][c] == p(P, expected[r][c]));
    }

  CHECK(determinant(M) == p(P, "1"));
}

TEST_CASE("matrices multiply and compare") {
  auto s = quadric_line_family();
  GradedMonomialBasis b = monomial_basis(s.var_ring(), {1, 1, 1, 1}, 1);
  ParamMatrix M = substitution_matrix(s, b);
  REQUIRE(M.size() == 4);
  auto P = M.param_ring;
  // column 2 is the image of x2, column 3 the image of x3
  CHECK(M.entries[1][2] == p(P, "t"));
  CHECK(M.entries[1][3] == p(P, "t^2"));
  CHECK(M.entries[2][3] == p(P, "2*t"));
  CHECK(M.entries[0][3] == p(P, "t"));
  CHECK_FALSE(M.is_identity());

  ParamMatrix I{P, {}};
  I.entries.assign(4, std::vector<Polynomial>(4, Polynomial::zero(P)));
  for (int i = 0; i < 4; ++i) I.entries[i][i] = p(P, "1");
  CHECK(I.is_identity());
  CHECK((M * I) == M);
  CHECK(determinant(M) == p(P, "1"));
}

TEST_CASE("images outside the graded span are rejected") {
  auto vars = make_ring({"x", "y"});
  auto params = make_ring({"a"});
  auto C = extend_ring(vars, params->names());
  // x -> x + a is not homogeneous of weight one
  SubstitutionAutomorphism bad(vars, params, {p(C, "x + a"), p(C, "y")});
  GradedMonomialBasis b = monomial_basis(vars, {1, 1}, 2);
  CHECK_THROWS_AS(substitution_matrix(bad, b), std::invalid_argument);

  // shear is fine
  SubstitutionAutomorphism shear(vars, params, {p(C, "x + a*y"), p(C, "y")});
  ParamMatrix M = substitution_matrix(shear, b);
  auto P = M.param_ring;
  // basis x^2, x*y, y^2: image of x^2 is x^2 + 2a xy + a^2 y^2
  CHECK(M.entries[0][0] == p(P, "1"));
  CHECK(M.entries[1][0] == p(P, "2*a"));
  CHECK(M.entries[2][0] == p(P, "a^2"));
}

TEST_CASE("group law holds for translation families") {
  auto s = weighted_plane_family();
  GradedMonomialBasis b4 = monomial_basis(s.var_ring(), {1, 1, 2}, 4);
  CHECK(group_law_check(s, b4));

  auto line = quadric_line_family();
  GradedMonomialBasis b1 = monomial_basis(line.var_ring(), {1, 1, 1, 1}, 1);
  GradedMonomialBasis b2 = monomial_basis(line.var_ring(), {1, 1, 1, 1}, 2);
  CHECK(group_law_check(line, b1));
  CHECK(group_law_check(line, b2));

  // a family that composes multiplicatively fails the additive law
  auto vars = make_ring({"x", "y"});
  auto params = make_ring({"a"});
  auto C = extend_ring(vars, params->names());
  SubstitutionAutomorphism scale_shear(vars, params, {p(C, "x + a*x"), p(C, "y")});
  GradedMonomialBasis bb = monomial_basis(vars, {1, 1}, 1);
  CHECK_FALSE(group_law_check(scale_shear, bb));
}
