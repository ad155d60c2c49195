#include "krammer/operators.hpp"

#include "krammer/errors.hpp"

#include <sstream>

namespace krammer {

namespace {

void require_roots(const CoxeterSystem& sys, const char* what) {
  if (sys.spec.family == Family::I2) throw UnsupportedType(std::string(what) + " undefined for I2 systems");
}

std::string describe(const CoxeterSystem& sys, int s) {
  std::ostringstream os;
  os << "reflection " << s << " of " << sys.spec.to_string();
  return os.str();
}

} // namespace

RatMatrix tau(const CoxeterSystem& sys, int s, const Rat& m) {
  require_roots(sys, "tau");
  const int n = sys.num_reflections();
  RatMatrix t(n, n);
  for (int u = 0; u < n; ++u) {
    if (u == s) {
      t.at(s, s) = m;
    } else if (sys.commute(s, u)) {
      t.at(u, u) = 1;
    } else {
      t.at(sys.conjugate(s, u), u) = 1;
      t.at(s, u) -= 1;
    }
  }
  return t;
}

RatMatrix p_op(const CoxeterSystem& sys, int s, const Rat& m) {
  require_roots(sys, "p_op");
  const int n = sys.num_reflections();
  RatMatrix p(n, n);
  for (int u = 0; u < n; ++u) {
    if (u == s)
      p.at(s, s) = 1 - m;
    else if (!sys.commute(s, u))
      p.at(s, u) = 1;
  }
  return p;
}

RatMatrix w_action(const CoxeterSystem& sys, int s) {
  require_roots(sys, "w_action");
  const int n = sys.num_reflections();
  RatMatrix w(n, n);
  for (int u = 0; u < n; ++u) w.at(sys.conjugate(s, u), u) = 1;
  return w;
}

VerifyResult verify_cubic(const CoxeterSystem& sys, const Rat& m) {
  require_roots(sys, "verify_cubic");
  if (m == 1 || m == -1)
    throw DegenerateParameter("eigenvalues collide at m = " + rat_to_string(m));
  VerifyResult res;
  Counts c = sys.counts();
  if (c.noncommuting % 2 != 0) {
    res.fail("c' is odd");
    return res;
  }
  const int n = sys.num_reflections();
  const RatMatrix id = RatMatrix::identity(n);
  for (int s = 0; s < n && res.ok; ++s) {
    RatMatrix t = tau(sys, s, m);
    RatMatrix t2 = t * t;
    RatMatrix cubic = t2 * t - t2.scaled(m) - t + id.scaled(m);
    if (!cubic.is_zero()) {
      res.fail("cubic relation fails at " + describe(sys, s));
      break;
    }
    struct Expect {
      Rat lambda;
      long mult;
    } expect[3] = {{m, 1}, {Rat(1), c.commuting + c.noncommuting / 2}, {Rat(-1), c.noncommuting / 2}};
    for (const auto& e : expect) {
      RatMatrix shifted = t - id.scaled(e.lambda);
      long nullity = shifted.nullity();
      if (nullity != e.mult) {
        std::ostringstream os;
        os << "eigenvalue " << rat_to_string(e.lambda) << " has multiplicity " << nullity << ", expected "
           << e.mult << " at " << describe(sys, s);
        res.fail(os.str());
        break;
      }
    }
    // the m-eigenspace is the line v_s
    RatVec es(n, Rat(0));
    es[s] = 1;
    if (t.apply(es) != vec_scale(m, es)) res.fail("v_s is not an m-eigenvector at " + describe(sys, s));
  }
  return res;
}

VerifyResult verify_central(const CoxeterSystem& sys, const Rat& m) {
  require_roots(sys, "verify_central");
  VerifyResult res;
  Counts c = sys.counts();
  const int n = sys.num_reflections();
  RatMatrix sum(n, n);
  Rat scalar = m + c.commuting;
  for (int s = 0; s < n; ++s) {
    RatMatrix t = tau(sys, s, m);
    if (t.trace() != scalar) res.fail("trace of t_s differs from m + c at " + describe(sys, s));
    RatVec v(n, Rat(1));
    RatVec tv = t.apply(v);
    // t_s v = (m - 1 - c') v_s + v
    RatVec expect(n, Rat(1));
    expect[s] += m - 1 - c.noncommuting;
    if (tv != expect) res.fail("t_s(sum of v_u) has the wrong form at " + describe(sys, s));
    sum = sum + t;
  }
  if (sum != RatMatrix::identity(n).scaled(scalar)) res.fail("sum of all t_s is not (m + c) Id");
  return res;
}

VerifyResult verify_equivariance(const CoxeterSystem& sys, const Rat& m) {
  require_roots(sys, "verify_equivariance");
  VerifyResult res;
  const int n = sys.num_reflections();
  for (int w = 0; w < n && res.ok; ++w) {
    RatMatrix pw = w_action(sys, w);
    for (int s = 0; s < n; ++s) {
      // w t_s w^{-1} = t_{wsw}; permutation matrices are orthogonal
      if (pw * tau(sys, s, m) * pw.transpose() != tau(sys, sys.conjugate(w, s), m)) {
        std::ostringstream os;
        os << "equivariance fails for w = " << w << ", s = " << s << " in " << sys.spec.to_string();
        res.fail(os.str());
        break;
      }
    }
  }
  return res;
}

std::vector<Rat> default_sample_points() {
  return {Rat(2), Rat(5), Rat(7), Rat(11)};
}

} // namespace krammer
