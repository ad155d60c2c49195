#include "krammer/invariant_form.hpp"

#include "krammer/charpoly.hpp"
#include "krammer/errors.hpp"
#include "krammer/operators.hpp"

#include <sstream>

namespace krammer {

RatMatrix noncommuting_adjacency(const CoxeterSystem& sys) {
  if (sys.spec.family == Family::I2) throw UnsupportedType("adjacency undefined for I2 systems");
  const int n = sys.num_reflections();
  RatMatrix a(n, n);
  for (int s = 0; s < n; ++s)
    for (int u = 0; u < n; ++u)
      if (s != u && !sys.commute(s, u)) a.at(s, u) = 1;
  return a;
}

RatMatrix form_matrix(const CoxeterSystem& sys, const Rat& m) {
  RatMatrix g = noncommuting_adjacency(sys).scaled(Rat(-1));
  for (int s = 0; s < sys.num_reflections(); ++s) g.at(s, s) = m - 1;
  return g;
}

Poly discriminant(const CoxeterSystem& sys) {
  Poly chi = char_poly_integer(noncommuting_adjacency(sys));
  return chi.shifted(Rat(-1));  // chi(m - 1)
}

FactoredPoly factor_discriminant(const CoxeterSystem& sys) {
  Poly disc = discriminant(sys);
  long bound = sys.counts().noncommuting + 1;
  auto f = factor_integer_roots(disc, bound);
  if (!f) throw NonIntegerRoot("discriminant of " + sys.spec.to_string() + " has a non-integer root");
  return *f;
}

VerifyResult verify_selfadjoint(const CoxeterSystem& sys, const Rat& m) {
  VerifyResult res;
  const int n = sys.num_reflections();
  RatMatrix g = form_matrix(sys, m);
  if (g != g.transpose()) res.fail("Gram matrix is not symmetric");
  for (int s = 0; s < n && res.ok; ++s) {
    RatMatrix t = tau(sys, s, m);
    if (g * t != t.transpose() * g) {
      res.fail("t_s is not self-adjoint for s = " + std::to_string(s));
      break;
    }
    // p_s x = -(v_s|x) v_s: row s of p_s is the negated Gram row, all else 0
    RatMatrix p = p_op(sys, s, m);
    RatMatrix outer(n, n);
    for (int u = 0; u < n; ++u) outer.at(s, u) = -g.at(s, u);
    if (p != outer) {
      res.fail("p_s is not -(v_s|.) v_s for s = " + std::to_string(s));
      break;
    }
  }
  if (m == 1) {
    res.skip("projector sub-check skipped: m = 1");
    return res;
  }
  if (discriminant(sys).eval(m) == 0) {
    res.skip("projector sub-check skipped: degenerate form, disc(" + rat_to_string(m) + ") = 0");
    return res;
  }
  for (int s = 0; s < n && res.ok; ++s) {
    RatMatrix pi = p_op(sys, s, m).scaled(1 / (Rat(1) - m));
    if (pi * pi != pi) {
      res.fail("projector is not idempotent for s = " + std::to_string(s));
      break;
    }
    if (pi.rank() != 1) res.fail("projector rank is not 1 for s = " + std::to_string(s));
  }
  return res;
}

bool positive_definite(const CoxeterSystem& sys, const Rat& m) {
  RatMatrix g = form_matrix(sys, m);
  // clear the single denominator: entries are m-1, -1, 0
  Int den = m.get_den();
  if (den > 1) g = g.scaled(Rat(den));
  return leading_minors_positive(g);
}

} // namespace krammer
