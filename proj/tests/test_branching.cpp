#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "krammer/branching.hpp"
#include "krammer/errors.hpp"
#include "krammer/invariant_form.hpp"
#include "krammer/operators.hpp"

using namespace krammer;

TEST_CASE("type A branch block dimensions") {
  CoxeterSystem a2 = build_system(TypeSpec::parse("A2"));
  BranchDecomposition d = branch_A(a2, Rat(7));
  CHECK(d.checks.ok);
  REQUIRE(d.blocks.size() == 3);
  CHECK(d.block("V_{n-1}").basis.size() == 1);
  CHECK(d.block("U_{n-1}").basis.size() == 1);
  CHECK(d.block("S_{n-1}").basis.size() == 1);
  CHECK(d.total_dim() == 3);
  CHECK_THROWS_AS(d.block("W"), std::invalid_argument);

  CoxeterSystem a4 = build_system(TypeSpec::parse("A4"));
  d = branch_A(a4, Rat(7));
  CHECK(d.checks.ok);
  CHECK(d.block("V_{n-1}").basis.size() == 6);
  CHECK(d.block("U_{n-1}").basis.size() == 3);
  CHECK(d.total_dim() == 10);
}

TEST_CASE("type A branch holds across parameters") {
  for (const char* ts : {"A2", "A3", "A4", "A5"}) {
    CAPTURE(ts);
    CoxeterSystem sys = build_system(TypeSpec::parse(ts));
    for (const Rat& m : default_sample_points()) {
      if (m == sys.rank() + 1 - 4 || m == 2 * (sys.rank() + 1) - 5) continue;
      BranchDecomposition d = branch_A(sys, m);
      CHECK(d.checks.ok);
      if (!d.checks.ok) MESSAGE(d.checks.detail);
    }
    CHECK(branch_A(sys, Rat(9, 2)).checks.ok);
  }
}

TEST_CASE("type A Gram values") {
  CoxeterSystem a3 = build_system(TypeSpec::parse("A3"));
  BranchDecomposition d = branch_A(a3, Rat(5));
  CHECK(d.alpha == Rat(16, 5));
  CHECK(d.beta == Rat(-8, 5));

  // with n = 3: alpha - beta = m and alpha + beta = m(m-3)/(m-1)
  auto [alpha, beta] = branch_gram_A(3, Rat(11));
  CHECK(alpha - beta == 11);
  CHECK(alpha + beta == Rat(44, 5));
  // one-step recursion: disc(A2) = (m-1) (alpha-beta)(alpha+beta)
  Poly disc2 = discriminant(build_system(TypeSpec::parse("A2")));
  CHECK(disc2.eval(Rat(11)) == (Rat(11) - 1) * (alpha - beta) * (alpha + beta));
}

TEST_CASE("type A branch poles") {
  CoxeterSystem a3 = build_system(TypeSpec::parse("A3"));  // n = 4: poles 0 and 3
  CHECK_THROWS_AS(branch_A(a3, Rat(0)), PoleParameter);
  CHECK_THROWS_AS(branch_A(a3, Rat(3)), PoleParameter);
  CHECK_THROWS_AS(branch_gram_A(4, Rat(3)), PoleParameter);
  CoxeterSystem a4 = build_system(TypeSpec::parse("A4"));  // n = 5: poles 1 and 5
  CHECK_THROWS_AS(branch_A(a4, Rat(1)), PoleParameter);
  CHECK_THROWS_AS(branch_A(a4, Rat(5)), PoleParameter);
  CHECK_THROWS_AS(branch_A(build_system(TypeSpec::parse("A1")), Rat(7)), UnsupportedType);
  CHECK_THROWS_AS(branch_A(build_system(TypeSpec::parse("D4")), Rat(7)), UnsupportedType);
}

TEST_CASE("type D branch block dimensions") {
  CoxeterSystem d4 = build_system(TypeSpec::parse("D4"));
  BranchDecomposition d = branch_D(d4, Rat(7));
  CHECK(d.checks.ok);
  if (!d.checks.ok) MESSAGE(d.checks.detail);
  REQUIRE(d.blocks.size() == 4);
  CHECK(d.block("V_{n-1}").basis.size() == 6);
  CHECK(d.block("U^D_{n-1}").basis.size() == 3);
  CHECK(d.block("U^A_{n-1}").basis.size() == 2);
  CHECK(d.block("S_{n-1}").basis.size() == 1);
  CHECK(d.total_dim() == 12);
}

TEST_CASE("type D branch holds across parameters") {
  for (const char* ts : {"D4", "D5"}) {
    CAPTURE(ts);
    CoxeterSystem sys = build_system(TypeSpec::parse(ts));
    int n = sys.rank();
    for (const Rat& m : default_sample_points()) {
      if (m == 4 * n - 11 || m == 2 * n - 9) continue;
      BranchDecomposition d = branch_D(sys, m);
      CHECK(d.checks.ok);
      if (!d.checks.ok) MESSAGE(d.checks.detail);
    }
    CHECK(branch_D(sys, Rat(-7, 2)).checks.ok);
  }
}

TEST_CASE("type D Gram values") {
  CoxeterSystem d4 = build_system(TypeSpec::parse("D4"));
  BranchDecomposition d = branch_D(d4, Rat(7));
  CHECK(d.alpha == 1536);
  CHECK(d.beta == -2304);
  // displayed product forms, n = 4, m = 7
  CHECK(d.alpha - d.beta == 2 * 10 * 6 * 8 * 4);
  CHECK(d.alpha + 2 * d.beta == 2 * (-2) * 6 * 2 * 64);
}

TEST_CASE("type D branch poles") {
  CoxeterSystem d4 = build_system(TypeSpec::parse("D4"));  // n = 4: poles 5 and -1
  CHECK_THROWS_AS(branch_D(d4, Rat(5)), PoleParameter);
  CHECK_THROWS_AS(branch_D(d4, Rat(-1)), PoleParameter);
  CoxeterSystem d5 = build_system(TypeSpec::parse("D5"));  // n = 5: poles 9 and 1
  CHECK_THROWS_AS(branch_D(d5, Rat(9)), PoleParameter);
  CHECK_THROWS_AS(branch_D(d5, Rat(1)), PoleParameter);
  CHECK_THROWS_AS(branch_D(build_system(TypeSpec::parse("A3")), Rat(7)), UnsupportedType);
}

TEST_CASE("discriminant recursion certified") {
  VerifyResult a = verify_discriminant_recursion(Family::A, 7);
  CHECK(a.ok);
  if (!a.ok) MESSAGE(a.detail);
  VerifyResult d = verify_discriminant_recursion(Family::D, 7);
  CHECK(d.ok);
  if (!d.ok) MESSAGE(d.detail);
  CHECK_THROWS_AS(verify_discriminant_recursion(Family::A, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_discriminant_recursion(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_discriminant_recursion(Family::E, 6), UnsupportedType);
}
