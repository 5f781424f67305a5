#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ngit/groebner.hpp"
#include "ngit/polynomial.hpp"

using namespace ngit;

namespace {

Polynomial p(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

}  // namespace

TEST_CASE("rational arithmetic stays normalized") {
  Rational a(6, 4);
  CHECK(a.numerator() == 3);
  CHECK(a.denominator() == 2);
  CHECK((a + Rational(1, 2)) == Rational(2));
  CHECK((a * Rational(2, 3)) == Rational(1));
  CHECK((Rational(1) / Rational(-2)).denominator() == 2);
  CHECK((Rational(1) / Rational(-2)).numerator() == -1);
  CHECK(Rational(-5, -10) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-7).str() == "-7");
  CHECK(Rational::from_string("-22/4") == Rational(-11, 2));
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK(Rational(5, 3).inverse() == Rational(3, 5));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("monomial divisibility and lattice operations") {
  Monomial a({2, 1, 0});
  Monomial b({1, 1, 1});
  CHECK_FALSE(a.divides(b));
  CHECK(Monomial({1, 1, 0}).divides(a));
  CHECK(Monomial::lcm(a, b) == Monomial({2, 1, 1}));
  CHECK(Monomial::gcd(a, b) == Monomial({1, 1, 0}));
  CHECK(a.quotient(Monomial({1, 0, 0})) == Monomial({1, 1, 0}));
  CHECK(a.coprime(Monomial({0, 0, 3})));
  CHECK_FALSE(a.coprime(b));
  CHECK(Monomial({0, 0, 0}).is_unit());
  CHECK(a.degree() == 3);
}

TEST_CASE("monomial orders rank as expected") {
  MonomialOrder grevlex = MonomialOrder::grevlex();
  MonomialOrder lex = MonomialOrder::lex();
  // x*z vs y^2 (exponents over x,y,z)
  Monomial xz({1, 0, 1});
  Monomial yy({0, 2, 0});
  CHECK(grevlex.greater(yy, xz));  // same degree, revlex tiebreak
  CHECK(lex.greater(xz, yy));
  // degree dominates in grevlex
  CHECK(grevlex.greater(Monomial({0, 0, 3}), Monomial({1, 1, 0})));
  CHECK(lex.greater(Monomial({1, 1, 0}), Monomial({0, 0, 3})));

  MonomialOrder elim = MonomialOrder::elimination(3, {0});
  // any monomial containing x beats any x-free monomial
  CHECK(elim.greater(Monomial({1, 0, 0}), Monomial({0, 5, 5})));
  // restricted to x-free monomials the order agrees with grevlex
  CHECK(elim.greater(Monomial({0, 2, 0}), Monomial({0, 1, 1})) ==
        grevlex.greater(Monomial({0, 2, 0}), Monomial({0, 1, 1})));
  CHECK_THROWS_AS(MonomialOrder::elimination(3, {7}), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic and canonical form") {
  auto R = make_ring({"x", "y"});
  Polynomial f = p(R, "x^2 - y");
  Polynomial g = p(R, "x^2 + y");
  CHECK((f + g).str() == "2*x^2");
  CHECK((f * g).str() == "x^4 - y^2");
  CHECK((f - f).is_zero());
  CHECK(f.pow(2).str() == "x^4 - 2*x^2*y + y^2");
  CHECK(p(R, "0").is_zero());
  CHECK(p(R, "x - x").is_zero());
  CHECK(Polynomial::zero(R).str() == "0");
  CHECK(p(R, "3 - 5").constant_value() == Rational(-2));
  CHECK_THROWS_AS(p(R, "x").constant_value(), std::logic_error);
  CHECK(f.total_degree() == 2);
}

TEST_CASE("polynomial parser round trips and rejects junk") {
  auto R = make_ring({"x", "y", "z"});
  for (const char* text : {"x^3 - y^2", "1/2*x*y - 7*z + 2", "-x + y - z",
                           "x^2*y^2*z^2 - 1/3", "42", "-5/6"}) {
    Polynomial f = p(R, text);
    CHECK(p(R, f.str()) == f);
  }
  CHECK(p(R, "(x + y)*(x - y)") == p(R, "x^2 - y^2"));
  CHECK(p(R, "2*(x + 3)^2") == p(R, "2*x^2 + 12*x + 18"));
  // a sign binds looser than an exponent
  CHECK(p(R, "-x^2 - y") == Polynomial::zero(R) - p(R, "x^2 + y"));
  CHECK(p(R, "(-x)^2") == p(R, "x^2"));
  CHECK(p(R, "x - -y") == p(R, "x + y"));
  CHECK(p(R, "-3/2*x") * Rational(-2) == p(R, "3*x"));
  CHECK_THROWS_AS(p(R, "w + 1"), std::invalid_argument);
  CHECK_THROWS_AS(p(R, "x +"), std::invalid_argument);
  CHECK_THROWS_AS(p(R, "x ^ y"), std::invalid_argument);
  CHECK_THROWS_AS(p(R, "x/2"), std::invalid_argument);
  CHECK_THROWS_AS(p(R, ""), std::invalid_argument);
  CHECK_THROWS_AS(p(R, "(x"), std::invalid_argument);
}

TEST_CASE("substitution and ring maps") {
  auto R = make_ring({"x", "y"});
  auto S = make_ring({"u", "v", "w"});
  Polynomial f = p(R, "x^2 + x*y");
  Polynomial g = f.substitute(S, {p(S, "u + v"), p(S, "w")});
  CHECK(g == p(S, "(u + v)^2 + (u + v)*w"));

  Polynomial moved = p(R, "x^2 - y").map_ring(S, {2, 0});
  CHECK(moved == p(S, "w^2 - u"));
  CHECK_THROWS_AS(p(R, "x*y").map_ring(S, {-1, 0}), std::invalid_argument);
}

TEST_CASE("primitive decomposition and exact division") {
  auto R = make_ring({"x", "y"});
  Polynomial f = p(R, "4/3*x^2 - 2/3*y");
  auto [content, prim] = f.primitive_decomposition();
  CHECK(content == Rational(2, 3));
  CHECK(prim == p(R, "2*x^2 - y"));
  CHECK(content * prim == f);
  CHECK(p(R, "-x - y").primitive_part() == p(R, "x + y"));

  auto q = try_divide_exact(p(R, "x^2 - y^2"), p(R, "x - y"));
  REQUIRE(q.has_value());
  CHECK(*q == p(R, "x + y"));
  CHECK_FALSE(try_divide_exact(p(R, "x^2 - y^2"), p(R, "x - 1")).has_value());
  CHECK_FALSE(try_divide_exact(p(R, "x"), p(R, "0")).has_value());
}

TEST_CASE("reduced bases for hand-checked ideals") {
  auto R = make_ring({"x", "y"});
  MonomialOrder ord = MonomialOrder::grevlex();

  Ideal I(R, {p(R, "x - y^2"), p(R, "y")});
  Ideal gb = groebner_basis(I, ord);
  REQUIRE(gb.generators().size() == 2);
  CHECK(gb.generators()[0] == p(R, "y"));
  CHECK(gb.generators()[1] == p(R, "x"));

  Ideal unit = groebner_basis(Ideal(R, {p(R, "x"), p(R, "x + 1")}), ord);
  REQUIRE(unit.generators().size() == 1);
  CHECK(unit.generators()[0] == p(R, "1"));

  // reduced basis is independent of generator order and scaling
  Ideal J1(R, {p(R, "x^2 + y"), p(R, "x*y - 1")});
  Ideal J2(R, {p(R, "3*x*y - 3"), p(R, "-x^2 - y")});
  CHECK(groebner_basis(J1, ord) == groebner_basis(J2, ord));
}

TEST_CASE("normal form is a two-sided membership test") {
  auto R = make_ring({"x", "y", "z"});
  MonomialOrder ord = MonomialOrder::grevlex();
  Ideal I(R, {p(R, "x^2 + y^2 + z^2 - 1"), p(R, "x - y")});
  Ideal gb = groebner_basis(I, ord);
  Polynomial member = p(R, "(x - y)*(x + z) + (x^2 + y^2 + z^2 - 1)*y");
  CHECK(normal_form(member, gb, ord).is_zero());
  CHECK_FALSE(normal_form(p(R, "x"), gb, ord).is_zero());
  // normal form is idempotent and subtracts to a member
  Polynomial nf = normal_form(p(R, "x^3 + y"), gb, ord);
  CHECK(normal_form(nf, gb, ord) == nf);
  CHECK(normal_form(p(R, "x^3 + y") - nf, gb, ord).is_zero());
}

TEST_CASE("elimination projects parameterized varieties") {
  auto R = make_ring({"t", "x", "y"});
  Ideal I(R, {p(R, "x - t^2"), p(R, "y - t^3")});
  Ideal E = eliminate(I, {0});
  REQUIRE(E.generators().size() == 1);
  CHECK(E.generators()[0] == p(R, "x^3 - y^2"));

  // eliminating nothing returns the reduced basis
  Ideal E0 = eliminate(I, {});
  CHECK(E0 == groebner_basis(I, MonomialOrder::grevlex()));
}

TEST_CASE("saturation removes component supported on the divisor") {
  auto R = make_ring({"x", "y"});
  // origin union the line x = 1; saturating by x - 1 keeps the origin
  Ideal I(R, {p(R, "x*(x - 1)"), p(R, "y*(x - 1)")});
  Ideal S = saturate(I, p(R, "x - 1"));
  Ideal expected = groebner_basis(Ideal(R, {p(R, "x"), p(R, "y")}), MonomialOrder::grevlex());
  CHECK(S == expected);

  CHECK(saturate(Ideal(R, {p(R, "x*y")}), p(R, "y")).generators() ==
        std::vector<Polynomial>{p(R, "x")});
  // a power of the divisor inside the ideal saturates to the whole ring
  Ideal J(R, {p(R, "x*y"), p(R, "x^2")});
  CHECK(saturate(J, p(R, "x")).generators() == std::vector<Polynomial>{p(R, "1")});
  // saturating by a unit is the identity on the reduced basis
  CHECK(saturate(J, p(R, "1")) == groebner_basis(J, MonomialOrder::grevlex()));
}

TEST_CASE("radical membership via a single auxiliary variable") {
  auto R = make_ring({"x", "y"});
  Ideal I(R, {p(R, "x^2")});
  CHECK(radical_membership(p(R, "x"), I));
  CHECK(radical_membership(p(R, "x*y"), I));
  CHECK_FALSE(radical_membership(p(R, "x + y"), I));
  CHECK_FALSE(radical_membership(p(R, "1"), Ideal(R, {p(R, "x")})));
  CHECK(radical_membership(p(R, "0"), Ideal(R, {p(R, "x")})));
}

TEST_CASE("subalgebra membership produces verifiable witnesses") {
  auto R = make_ring({"x", "y"});
  std::vector<Polynomial> gens{p(R, "x^2"), p(R, "y + x^3")};
  MembershipWitness m = subalgebra_membership(p(R, "x^6 + 2*y + 2*x^3"), gens);
  REQUIRE(m.member);
  // expanding the witness at the generators recovers the input
  Polynomial expanded = m.witness.substitute(R, gens);
  CHECK(expanded == p(R, "x^6 + 2*y + 2*x^3"));

  CHECK_FALSE(subalgebra_membership(p(R, "x"), gens).member);
  CHECK(subalgebra_membership(p(R, "7"), gens).member);
}

TEST_CASE("relation ideal of a monomial pair") {
  auto R = make_ring({"x"});
  std::vector<Polynomial> gens{p(R, "x^2"), p(R, "x^3")};
  Ideal rel = relation_ideal(gens, {"a", "b"});
  REQUIRE(rel.generators().size() == 1);
  auto T = rel.ring();
  CHECK(rel.generators()[0] == parse_polynomial(T, "a^3 - b^2"));
}

TEST_CASE("step budget interrupts long runs") {
  auto R = make_ring({"x", "y", "z"});
  // cyclic-3 style system, small but needs a few pairs
  Ideal I(R, {p(R, "x + y + z"), p(R, "x*y + y*z + z*x"), p(R, "x*y*z - 1")});
  StepBudget tight(1);
  CHECK_THROWS_AS(groebner_basis(I, MonomialOrder::grevlex(), &tight), BudgetExceeded);
  StepBudget roomy(100000);
  Ideal gb = groebner_basis(I, MonomialOrder::grevlex(), &roomy);
  CHECK(gb.generators().size() >= 3);
  CHECK(roomy.used > 0);
}

TEST_CASE("ideal constructor validates rings") {
  auto R = make_ring({"x"});
  auto S = make_ring({"y"});
  CHECK_THROWS_AS(Ideal(R, {parse_polynomial(S, "y")}), std::invalid_argument);
  CHECK_THROWS_AS(Ideal(nullptr), std::invalid_argument);
  // zero generators are dropped
  CHECK(Ideal(R, {Polynomial::zero(R)}).generators().empty());
}
