#pragma once

#include "krammer/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace krammer {

// Dense univariate polynomial over Q. The variable prints as "m" by default
// since almost every polynomial here lives in the representation parameter.
class Poly {
public:
  Poly() = default;
  explicit Poly(const Rat& c) { c_.assign(1, c); trim(); }
  static Poly x() { return from_coeffs({Rat(0), Rat(1)}); }
  static Poly from_coeffs(std::vector<Rat> c);
  static Poly linear(const Rat& a0, const Rat& a1) { return from_coeffs({a0, a1}); }

  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const { return k >= 0 && k < int(c_.size()) ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  bool operator==(const Poly&) const = default;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;
  Poly pow(int e) const;

  Rat eval(const Rat& x) const;
  // p(x + a)
  Poly shifted(const Rat& a) const;

  std::string to_string(const std::string& var = "m") const;

private:
  std::vector<Rat> c_;  // c_[k] is the coefficient of x^k, no trailing zeros
  void trim();
};

// Quotient and remainder over Q[x]; d must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& d);
Poly poly_gcd(Poly a, Poly b);  // monic gcd

// lead * prod (x - root)^mult with distinct roots kept sorted descending.
struct FactoredPoly {
  Rat lead = 1;
  std::vector<std::pair<Rat, int>> factors;

  void add_root(const Rat& root, int mult);
  int multiplicity(const Rat& root) const;
  int degree() const;
  Poly expand() const;
  std::string to_string(const std::string& var = "m") const;
  bool operator==(const FactoredPoly&) const = default;
};

// Splits p into linear factors by scanning integer roots in [-bound, bound].
// nullopt if a nonconstant factor remains afterwards.
std::optional<FactoredPoly> factor_integer_roots(const Poly& p, long bound);

// Parses factored-form strings: products of "m", "(m-k)", "(m+k)" (k a
// positive rational literal), each with an optional "^e", and an optional
// leading rational coefficient. Examples: "m^2(m-3)", "(m-9)(m-1)^6(m+3)^2".
// Throws std::invalid_argument on malformed input.
FactoredPoly parse_factored(const std::string& s);

// All rational roots of p (ascending, without multiplicity), by divisor
// enumeration on the cleared-denominator constant and leading coefficients.
std::vector<Rat> rational_roots(const Poly& p);

// n-th cyclotomic polynomial, n >= 1.
Poly cyclotomic(int n);

// Minimal polynomial of 2 cos(2 pi / n) over Q: x-2 for n=1, x+2 for n=2,
// and for n >= 3 the palindromic fold of cyclotomic(n), monic of degree
// phi(n)/2.
Poly cos_minimal_poly(int n);

} // namespace krammer
