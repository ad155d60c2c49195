#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "krammer/polynomial.hpp"

#include <stdexcept>

using namespace krammer;

TEST_CASE("basic polynomial arithmetic") {
  Poly x = Poly::x();
  Poly p = x * x - Poly(Rat(1));  // x^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(3)) == 8);
  CHECK(p.eval(Rat(1)) == 0);
  CHECK((p + Poly(Rat(1))).coeff(0) == 0);
  CHECK((p * p).degree() == 4);
  CHECK(p.pow(3).eval(Rat(2)) == 27);
  CHECK(p.scaled(Rat(1, 2)).eval(Rat(3)) == 4);
  CHECK(Poly().is_zero());
  CHECK(Poly().degree() == -1);
}

TEST_CASE("shift composes correctly") {
  Poly x = Poly::x();
  Poly p = x * x;  // x^2
  Poly q = p.shifted(Rat(-1));  // (x-1)^2
  CHECK(q == Poly::from_coeffs({Rat(1), Rat(-2), Rat(1)}));
  CHECK(p.shifted(Rat(5)).eval(Rat(0)) == 25);
}

TEST_CASE("divmod and gcd") {
  Poly x = Poly::x();
  Poly p = (x - Poly(Rat(2))) * (x + Poly(Rat(3))) * (x - Poly(Rat(2)));
  auto [q, r] = poly_divmod(p, x - Poly(Rat(2)));
  CHECK(r.is_zero());
  CHECK(q == (x - Poly(Rat(2))) * (x + Poly(Rat(3))));

  auto [q2, r2] = poly_divmod(p, x * x);
  CHECK((q2 * x * x + r2) == p);
  CHECK(r2.degree() < 2);

  Poly g = poly_gcd(p, (x - Poly(Rat(2))) * (x - Poly(Rat(7))));
  CHECK(g == x - Poly(Rat(2)));
  CHECK(poly_gcd(p, Poly(Rat(5))).degree() == 0);
}

TEST_CASE("integer-root factorization") {
  Poly x = Poly::x();
  Poly p = (x - Poly(Rat(3))) * x * x;  // m^2 (m-3)
  auto f = factor_integer_roots(p, 10);
  REQUIRE(f.has_value());
  CHECK(f->lead == 1);
  CHECK(f->multiplicity(Rat(0)) == 2);
  CHECK(f->multiplicity(Rat(3)) == 1);
  CHECK(f->degree() == 3);
  CHECK(f->expand() == p);

  // scalar multiple keeps the lead
  auto g = factor_integer_roots(p.scaled(Rat(-7)), 10);
  REQUIRE(g.has_value());
  CHECK(g->lead == -7);

  // x^2 + 1 has no integer roots
  CHECK(!factor_integer_roots(x * x + Poly(Rat(1)), 50).has_value());
  // bound too small to reach the root
  CHECK(!factor_integer_roots(x - Poly(Rat(9)), 5).has_value());
}

TEST_CASE("factored form printing and parsing round-trips") {
  FactoredPoly f;
  f.add_root(Rat(21), 1);
  f.add_root(Rat(3), 20);
  f.add_root(Rat(-3), 15);
  CHECK(f.to_string() == "(m-21)(m-3)^20(m+3)^15");
  CHECK(parse_factored(f.to_string()) == f);

  FactoredPoly g = parse_factored("m^2(m-3)");
  CHECK(g.multiplicity(Rat(0)) == 2);
  CHECK(g.multiplicity(Rat(3)) == 1);
  CHECK(g.expand().eval(Rat(5)) == 50);

  // repeated factors accumulate
  FactoredPoly h = parse_factored("(m-9)(m-1)^6(m+3)^2(m-1)^3");
  CHECK(h.multiplicity(Rat(1)) == 9);
  CHECK(h.degree() == 12);

  CHECK(parse_factored("3(m+1/2)^2").expand().eval(Rat(0)) == Rat(3, 4));
  CHECK(parse_factored("-m").expand().eval(Rat(4)) == -4);
  CHECK(parse_factored(" (m-1) * (m+1) ").expand() == Poly::x() * Poly::x() - Poly(Rat(1)));

  CHECK_THROWS_AS(parse_factored("(x-1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_factored("(m*2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_factored("m^"), std::invalid_argument);
}

TEST_CASE("poly printing") {
  Poly p = Poly::from_coeffs({Rat(3), Rat(0), Rat(-1), Rat(1)});
  CHECK(p.to_string() == "m^3 - m^2 + 3");
  CHECK(Poly(Rat(-1, 2)).to_string("t") == "-1/2");
  CHECK(Poly::x().to_string() == "m");
}

TEST_CASE("rational root enumeration") {
  Poly x = Poly::x();
  Poly p = (x - Poly(Rat(2))) * (x + Poly(Rat(2))).pow(2) * x * x * Poly(Rat(4));
  CHECK(rational_roots(p) == std::vector<Rat>{Rat(-2), Rat(0), Rat(2)});

  // non-integer roots and denominator clearing
  Poly q = (x - Poly(Rat(1, 3))) * (x + Poly(Rat(5, 2)));
  CHECK(rational_roots(q) == std::vector<Rat>{Rat(-5, 2), Rat(1, 3)});

  CHECK(rational_roots(x * x + Poly(Rat(1))).empty());
  CHECK(rational_roots(Poly(Rat(7))).empty());
}

TEST_CASE("cyclotomic polynomials") {
  Poly x = Poly::x();
  CHECK(cyclotomic(1) == x - Poly(Rat(1)));
  CHECK(cyclotomic(2) == x + Poly(Rat(1)));
  CHECK(cyclotomic(3) == Poly::from_coeffs({Rat(1), Rat(1), Rat(1)}));
  CHECK(cyclotomic(4) == Poly::from_coeffs({Rat(1), Rat(0), Rat(1)}));
  CHECK(cyclotomic(6) == Poly::from_coeffs({Rat(1), Rat(-1), Rat(1)}));
  CHECK(cyclotomic(5) == Poly::from_coeffs({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}));
  CHECK(cyclotomic(12) == Poly::from_coeffs({Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)}));

  // product over divisors of 12 recovers x^12 - 1
  Poly prod(Rat(1));
  for (int d : {1, 2, 3, 4, 6, 12}) prod = prod * cyclotomic(d);
  CHECK(prod == x.pow(12) - Poly(Rat(1)));

  CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("minimal polynomial of 2cos(2pi/n)") {
  Poly x = Poly::x();
  CHECK(cos_minimal_poly(1) == x - Poly(Rat(2)));
  CHECK(cos_minimal_poly(2) == x + Poly(Rat(2)));
  CHECK(cos_minimal_poly(3) == x + Poly(Rat(1)));
  CHECK(cos_minimal_poly(4) == x);
  CHECK(cos_minimal_poly(6) == x - Poly(Rat(1)));

  // 2cos(2pi/5) = (sqrt 5 - 1)/2 satisfies y^2 + y - 1
  CHECK(cos_minimal_poly(5) == Poly::from_coeffs({Rat(-1), Rat(1), Rat(1)}));
  // 2cos(2pi/7): y^3 + y^2 - 2y - 1
  CHECK(cos_minimal_poly(7) == Poly::from_coeffs({Rat(-1), Rat(-2), Rat(1), Rat(1)}));
  // 2cos(pi/6) = sqrt 3: y^2 - 3
  CHECK(cos_minimal_poly(12) == Poly::from_coeffs({Rat(-3), Rat(0), Rat(1)}));
  // 2cos(pi/5) = golden ratio: y^2 - y - 1
  CHECK(cos_minimal_poly(10) == Poly::from_coeffs({Rat(-1), Rat(-1), Rat(1)}));

  for (int n : {5, 7, 9, 10, 12, 15}) {
    Poly psi = cos_minimal_poly(n);
    // the fold divides the cyclotomic polynomial after substituting x + 1/x:
    // check degree and monicity instead of resubstituting
    CHECK(psi.coeff(psi.degree()) == 1);
  }
  CHECK(cos_minimal_poly(9).degree() == 3);
  CHECK(cos_minimal_poly(15).degree() == 4);
}
