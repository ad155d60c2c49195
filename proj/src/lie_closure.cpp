#include "krammer/lie_closure.hpp"

#include "krammer/errors.hpp"
#include "krammer/operators.hpp"

#include <array>
#include <deque>
#include <stdexcept>
#include <utility>

namespace krammer {

namespace {

// 2x2 matrices over Q[c], row-major
using PolyMat = std::array<Poly, 4>;

PolyMat pm_mul(const PolyMat& a, const PolyMat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

PolyMat pm_bracket(const PolyMat& a, const PolyMat& b) {
  PolyMat ab = pm_mul(a, b), ba = pm_mul(b, a);
  PolyMat r;
  for (int i = 0; i < 4; ++i) r[size_t(i)] = ab[size_t(i)] - ba[size_t(i)];
  return r;
}

Poly det_poly(const std::vector<std::vector<Poly>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly det;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor(n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t k = 0; k < n; ++k)
        if (k != j) minor[i - 1].push_back(m[i][k]);
    Poly term = m[0][j] * det_poly(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

RatMatrix pm_eval(const PolyMat& a, const Rat& c) {
  RatMatrix r(2, 2);
  for (int i = 0; i < 4; ++i) r.at(i / 2, i % 2) = a[size_t(i)].eval(c);
  return r;
}

// exact echelonized span of rational vectors
class RatSpan {
public:
  explicit RatSpan(int len) : len_(len), row_of_pivot_(size_t(len), -1) {}

  bool insert(RatVec v) {
    for (int j = 0; j < len_; ++j) {
      if (v[size_t(j)] == 0) continue;
      const int owner = row_of_pivot_[size_t(j)];
      if (owner < 0) {
        const Rat lead = v[size_t(j)];
        for (Rat& x : v) x /= lead;
        row_of_pivot_[size_t(j)] = int(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      const Rat f = v[size_t(j)];
      const RatVec& r = rows_[size_t(owner)];
      for (int k = j; k < len_; ++k) v[size_t(k)] -= f * r[size_t(k)];
    }
    return false;
  }

  long dimension() const { return long(rows_.size()); }
  const RatVec& row(int i) const { return rows_[size_t(i)]; }

private:
  int len_;
  std::vector<int> row_of_pivot_;
  std::vector<RatVec> rows_;
};

RatVec flatten(const RatMatrix& m) {
  RatVec v;
  v.reserve(size_t(m.rows()) * size_t(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

RatMatrix unflatten(const RatVec& v, int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v[size_t(i) * size_t(n) + size_t(j)];
  return m;
}

} // namespace

std::string generator_set_name(GeneratorSet s) {
  switch (s) {
    case GeneratorSet::all_reflections: return "all_reflections";
    case GeneratorSet::simple_reflections: return "simple_reflections";
    case GeneratorSet::last_column: return "last_column";
  }
  return "?";
}

SurjectivityReport check_surjectivity(const CoxeterSystem& sys, GeneratorSet set,
                                      const Rat& m, int p,
                                      const ClosureProgress& progress) {
  std::vector<int> chosen;
  switch (set) {
    case GeneratorSet::all_reflections:
      for (int s = 0; s < sys.num_reflections(); ++s) chosen.push_back(s);
      break;
    case GeneratorSet::simple_reflections:
      chosen = sys.simple_indices();
      break;
    case GeneratorSet::last_column: {
      if (sys.spec.family != Family::A)
        throw UnsupportedType("last_column generators only exist in type A");
      const int n = sys.rank() + 1;
      for (int i = 1; i <= n - 1; ++i) chosen.push_back(sys.transposition_index(i, n));
      break;
    }
  }
  std::vector<PrimeFieldMatrix> gens;
  gens.reserve(chosen.size());
  for (int s : chosen) gens.push_back(reduce_mod_p(tau(sys, s, m), p));

  ClosureResult cl = closure_dimension(gens, -1, progress);
  SurjectivityReport rep;
  rep.type = sys.spec;
  rep.set = set;
  rep.m = m;
  rep.p = p;
  rep.generator_count = long(chosen.size());
  rep.dimension = cl.dimension;
  rep.target = long(sys.num_reflections()) * sys.num_reflections();
  rep.saturated = cl.saturated;
  return rep;
}

std::vector<RatMatrix> folded_generators(const CoxeterSystem& sys, const FoldingMap& fold,
                                         const Rat& m) {
  if (fold.target != sys.spec)
    throw std::invalid_argument("folding " + fold.source + " targets " + fold.target.to_string());
  const std::vector<int>& simples = sys.simple_indices();
  std::vector<RatMatrix> gens;
  for (const std::vector<int>& image : fold.node_images) {
    for (size_t a = 0; a < image.size(); ++a)
      for (size_t b = a + 1; b < image.size(); ++b)
        if (!sys.commute(simples[size_t(image[a] - 1)], simples[size_t(image[b] - 1)]))
          throw std::logic_error("folded image nodes fail to commute");
    RatMatrix sum(sys.num_reflections(), sys.num_reflections());
    for (int node : image) sum = sum + tau(sys, simples[size_t(node - 1)], m);
    gens.push_back(sum);
  }
  return gens;
}

F4Split f4_split(const CoxeterSystem& sys, const Rat& m) {
  const std::vector<int> gamma = diagram_automorphism_e6(sys);
  const int N = sys.num_reflections();

  F4Split split;
  for (int s = 0; s < N; ++s) {
    if (gamma[size_t(s)] == s) {
      RatVec v(size_t(N), Rat(0));
      v[size_t(s)] = 1;
      split.plus_basis.push_back(std::move(v));
    } else if (gamma[size_t(s)] > s) {
      RatVec plus(size_t(N), Rat(0)), minus(size_t(N), Rat(0));
      plus[size_t(s)] = plus[size_t(gamma[size_t(s)])] = 1;
      minus[size_t(s)] = 1;
      minus[size_t(gamma[size_t(s)])] = -1;
      split.plus_basis.push_back(std::move(plus));
      split.minus_basis.push_back(std::move(minus));
    }
  }
  if (split.plus_basis.size() != 24 || split.minus_basis.size() != 12)
    throw std::logic_error("unexpected eigenspace dimensions");

  const RatMatrix plus_cols = RatMatrix::from_columns(split.plus_basis);
  const RatMatrix minus_cols = RatMatrix::from_columns(split.minus_basis);
  for (const RatMatrix& g : folded_generators(sys, folding_table("F4"), m)) {
    auto restricted = plus_cols.solve(g * plus_cols);
    if (!restricted) throw StabilityFailure("folded generator moves the +1 eigenspace");
    if (!minus_cols.solve(g * minus_cols))
      throw StabilityFailure("folded generator moves the -1 eigenspace");
    split.restricted.push_back(std::move(*restricted));
  }
  return split;
}

FoldedReport check_folded_surjectivity(const std::string& source, const Rat& m, int p,
                                       const ClosureProgress& progress) {
  const FoldingMap fold = folding_table(source);
  const CoxeterSystem sys = build_system(fold.target);

  std::vector<PrimeFieldMatrix> gens;
  if (source == "F4") {
    for (const RatMatrix& g : f4_split(sys, m).restricted) gens.push_back(reduce_mod_p(g, p));
  } else {
    for (const RatMatrix& g : folded_generators(sys, fold, m)) gens.push_back(reduce_mod_p(g, p));
  }

  ClosureResult cl = closure_dimension(gens, -1, progress);
  FoldedReport rep;
  rep.source = source;
  rep.target = fold.target;
  rep.m = m;
  rep.p = p;
  rep.dimension = cl.dimension;
  const long side = source == "F4" ? 24 : long(sys.num_reflections());
  rep.target_dim = side * side;
  rep.saturated = cl.saturated;
  return rep;
}

long rational_closure_dimension(const std::vector<RatMatrix>& generators) {
  if (generators.empty()) return 0;
  const int n = generators.front().rows();
  for (const RatMatrix& g : generators)
    if (g.rows() != n || g.cols() != n)
      throw SizeMismatch("closure generators must be square of one size");

  RatSpan span(n * n);
  std::deque<int> pending;
  for (const RatMatrix& g : generators)
    if (span.insert(flatten(g))) pending.push_back(int(span.dimension()) - 1);

  while (!pending.empty() && span.dimension() < long(n) * n) {
    RatMatrix x = unflatten(span.row(pending.front()), n);
    pending.pop_front();
    for (const RatMatrix& g : generators)
      if (span.insert(flatten(commutator(x, g)))) {
        pending.push_back(int(span.dimension()) - 1);
        if (span.dimension() >= long(n) * n) break;
      }
  }
  return span.dimension();
}

DihedralClosureReport burau_dihedral_closure() {
  const Poly c = Poly::x();
  const Poly zero, two(Rat(2));
  const PolyMat x{zero, zero, zero - c, two};
  const PolyMat y{two, zero - c, zero, zero};
  const PolyMat z = pm_bracket(x, y);
  const PolyMat w = pm_bracket(x, z);

  std::vector<std::vector<Poly>> rows;
  for (const PolyMat* g : {&x, &y, &z, &w})
    rows.push_back({(*g)[0], (*g)[1], (*g)[2], (*g)[3]});

  DihedralClosureReport rep;
  rep.certificate = det_poly(rows);
  rep.generic_dimension = rep.certificate.is_zero() ? -1 : 4;
  rep.exceptional = rational_roots(rep.certificate);
  for (const Rat& c0 : rep.exceptional)
    rep.exceptional_dimension.push_back(
        rational_closure_dimension({pm_eval(x, c0), pm_eval(y, c0)}));
  return rep;
}

DihedralCertificate dihedral_certificate(int order) {
  if (order < 1) throw std::invalid_argument("dihedral order must be positive");
  DihedralCertificate cert;
  cert.order = order;
  const DihedralClosureReport rep = burau_dihedral_closure();

  // 2 cos(2 pi / order) is rational only for these orders
  const bool rational = order <= 4 || order == 6;
  if (rational) {
    cert.c_rational = true;
    cert.c = order == 1 ? Rat(2)
             : order == 2 ? Rat(-2)
             : order == 3 ? Rat(-1)
             : order == 4 ? Rat(0)
                          : Rat(1);
    const Poly c = Poly::x();
    const Poly zero, two(Rat(2));
    const PolyMat x{zero, zero, zero - c, two};
    const PolyMat y{two, zero - c, zero, zero};
    cert.dimension = rational_closure_dimension({pm_eval(x, cert.c), pm_eval(y, cert.c)});
    cert.detail = "exact closure at c = " + rat_to_string(cert.c);
    return cert;
  }

  const Poly minimal = cos_minimal_poly(order);
  const Poly g = poly_gcd(rep.certificate, minimal);
  if (g.degree() != 0)
    throw DegenerateParameter("certificate shares a factor with the minimal polynomial of c");
  cert.dimension = 4;
  cert.detail = "certificate coprime to the degree-" + std::to_string(minimal.degree()) +
                " minimal polynomial of 2cos(2pi/" + std::to_string(order) + ")";
  return cert;
}

} // namespace krammer
