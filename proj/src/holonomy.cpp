#include "krammer/holonomy.hpp"

#include "krammer/errors.hpp"
#include "krammer/operators.hpp"

#include <sstream>

namespace krammer {

namespace {

struct Triple {
  int s0, si, sj;
};

Triple resolve_triple(const CoxeterSystem& sys, int node_i, int node_j) {
  if (sys.spec.family == Family::I2) throw UnsupportedType("triple ops undefined for I2 systems");
  const auto& simples = sys.simple_indices();
  if (node_i < 0 || node_j < 0 || node_i >= sys.rank() || node_j >= sys.rank() || node_i == node_j)
    throw std::invalid_argument("bad diagram node positions");
  int si = simples[node_i], sj = simples[node_j];
  if (sys.commute(si, sj)) throw std::invalid_argument("nodes are not adjacent in the diagram");
  return {sys.conjugate(si, sj), si, sj};
}

void check_triple_pole(const Rat& m) {
  if (m == 0 || m == 3)
    throw PoleParameter("triple eigenbasis has a pole at m = " + rat_to_string(m));
}

} // namespace

RatMatrix tau_flat(const CoxeterSystem& sys, const FlatDescriptor& flat, const Rat& m) {
  RatMatrix t(sys.num_reflections(), sys.num_reflections());
  for (int u : flat.members) t = t + tau(sys, u, m);
  return t;
}

VerifyResult verify_flat_relations(const CoxeterSystem& sys, const Rat& m) {
  if (sys.spec.family == Family::I2) throw UnsupportedType("flat relations undefined for I2 systems");
  VerifyResult res;
  const int n = sys.num_reflections();
  for (const FlatDescriptor& flat : sys.codim2_flats()) {
    RatMatrix tx = tau_flat(sys, flat, m);
    Rat scalar = flat.order == 2 ? m + 1 : m;
    for (int u : flat.members) {
      RatVec eu(n, Rat(0));
      eu[u] = 1;
      if (tx.apply(eu) != vec_scale(scalar, eu)) {
        std::ostringstream os;
        os << "t_X is not the scalar " << rat_to_string(scalar) << " on E_X for the order-" << flat.order
           << " flat through reflection " << u;
        res.fail(os.str());
        return res;
      }
    }
    for (int s : flat.members) {
      if (!commutator(tau(sys, s, m), tx).is_zero()) {
        std::ostringstream os;
        os << "[t_s, t_X] != 0 for s = " << s << " in an order-" << flat.order << " flat";
        res.fail(os.str());
        return res;
      }
    }
  }
  return res;
}

long TripleSpectrum::multiplicity(const Rat& lambda) const {
  for (const auto& [l, k] : multiplicities)
    if (l == lambda) return k;
  return 0;
}

TripleSpectrum triple_spectrum(const CoxeterSystem& sys, int node_i, int node_j, const Rat& m) {
  Triple tr = resolve_triple(sys, node_i, node_j);
  check_triple_pole(m);
  const int n = sys.num_reflections();
  RatMatrix t = tau(sys, tr.s0, m) + tau(sys, tr.si, m) + tau(sys, tr.sj, m);

  std::vector<Rat> lambdas = {Rat(3), Rat(-3), Rat(0)};
  if (m != 3 && m != -3 && m != 0) lambdas.push_back(m);

  TripleSpectrum out;
  out.s0 = tr.s0;
  out.si = tr.si;
  out.sj = tr.sj;
  long total = 0;
  for (const Rat& l : lambdas) {
    RatMatrix shifted = t;
    for (int i = 0; i < n; ++i) shifted.at(i, i) -= l;
    long mult = shifted.nullity();
    total += mult;
    out.multiplicities.emplace_back(l, mult);
  }
  if (total != n) {
    std::ostringstream os;
    os << "claimed eigenvalues account for " << total << " of " << n << " dimensions on "
       << sys.spec.to_string() << " at m = " << rat_to_string(m);
    throw SpectrumEscape(os.str());
  }
  return out;
}

WBasis w_basis(const CoxeterSystem& sys, int node_i, int node_j, const Rat& m) {
  Triple tr = resolve_triple(sys, node_i, node_j);
  check_triple_pole(m);
  const int n = sys.num_reflections();

  WBasis b;
  b.s0 = tr.s0;
  b.si = tr.si;
  b.sj = tr.sj;
  b.vectors.assign(n, {});

  auto unit = [&](int u) {
    RatVec v(n, Rat(0));
    v[u] = 1;
    return v;
  };
  b.vectors[tr.s0] = unit(tr.s0);
  b.vectors[tr.si] = unit(tr.si);
  b.vectors[tr.sj] = unit(tr.sj);

  const Rat denom = m * (m - 3);
  RatMatrix rho_i = w_action(sys, tr.si);
  RatMatrix rho_j = w_action(sys, tr.sj);

  for (int u = 0; u < n; ++u) {
    if (u == tr.s0 || u == tr.si || u == tr.sj) continue;
    bool c0 = sys.commute(u, tr.s0), ci = sys.commute(u, tr.si), cj = sys.commute(u, tr.sj);
    int count = int(c0) + int(ci) + int(cj);
    if (count == 3) {
      b.vectors[u] = unit(u);
      ++b.commuting_with_all;
    } else if (count == 0) {
      b.checks.fail("reflection " + std::to_string(u) + " commutes with none of the triple");
      return b;
    } else if (count == 2) {
      // commuting with two forces commuting with the third
      b.checks.fail("reflection " + std::to_string(u) + " commutes with exactly two of the triple");
      return b;
    } else if (c0) {
      // orbit keyed by its s0-commuting member
      RatVec w = unit(u);
      w[tr.s0] += 2 / denom;
      w[tr.si] += (m - 1) / denom;
      w[tr.sj] += (m - 1) / denom;
      b.vectors[u] = w;
      b.vectors[sys.conjugate(tr.si, u)] = rho_i.apply(w);
      b.vectors[sys.conjugate(tr.sj, u)] = rho_j.apply(w);
      ++b.orbits;
    }
  }

  RatMatrix t0 = tau(sys, tr.s0, m), ti = tau(sys, tr.si, m), tj = tau(sys, tr.sj, m);
  for (int x = 0; x < n && b.checks.ok; ++x) {
    if (x == tr.s0 || x == tr.si || x == tr.sj) continue;
    for (const auto& [s, t] : {std::pair<int, const RatMatrix*>{tr.s0, &t0}, {tr.si, &ti}, {tr.sj, &tj}}) {
      if (t->apply(b.vectors[x]) != b.vectors[sys.conjugate(s, x)]) {
        std::ostringstream os;
        os << "t_s w_x != w_{s•x} for s = " << s << ", x = " << x;
        b.checks.fail(os.str());
        break;
      }
    }
  }
  if (b.checks.ok && RatMatrix::from_columns(b.vectors).rank() != n)
    b.checks.fail("w vectors do not form a basis");
  return b;
}

VerifyResult verify_commuting_product_vanishes(const CoxeterSystem& sys, int s, int u, const Rat& m) {
  if (sys.spec.family == Family::I2) throw UnsupportedType("p products undefined for I2 systems");
  if (s == u || !sys.commute(s, u)) throw std::invalid_argument("reflections do not commute");
  VerifyResult res;
  RatMatrix ps = p_op(sys, s, m), pu = p_op(sys, u, m);
  if (!(ps * pu).is_zero()) res.fail("p_s p_u != 0");
  if (!(pu * ps).is_zero()) res.fail("p_u p_s != 0");
  return res;
}

} // namespace krammer
