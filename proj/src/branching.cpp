#include "krammer/branching.hpp"

#include "krammer/errors.hpp"
#include "krammer/invariant_form.hpp"
#include "krammer/operators.hpp"
#include "krammer/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace krammer {

namespace {

RatVec unit(int n, int i) {
  RatVec v(size_t(n), Rat(0));
  v[size_t(i)] = 1;
  return v;
}

Rat rat_pow(const Rat& base, long e) {
  Rat r(1);
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

bool block_stable(const RatMatrix& op, const RatMatrix& basis_cols) {
  return basis_cols.solve(op * basis_cols).has_value();
}

void check_stability(BranchDecomposition& dec, const CoxeterSystem& sys,
                     const std::vector<int>& parabolic, const Rat& m) {
  for (int s : parabolic) {
    RatMatrix op = tau(sys, s, m);
    for (const BranchBlock& blk : dec.blocks)
      if (!block_stable(op, RatMatrix::from_columns(blk.basis)))
        dec.checks.fail("block " + blk.label + " moved by generator " + std::to_string(s));
  }
}

void check_joint_span(BranchDecomposition& dec, int n_total) {
  std::vector<RatVec> rows;
  long dim = 0;
  for (const BranchBlock& blk : dec.blocks) {
    dim += long(blk.basis.size());
    rows.insert(rows.end(), blk.basis.begin(), blk.basis.end());
  }
  if (dim != n_total || RatMatrix::from_rows(rows).rank() != n_total)
    dec.checks.fail("blocks fail to span: total dimension " + std::to_string(dim) +
                    " of " + std::to_string(n_total));
}

void check_block_orthogonality(BranchDecomposition& dec, const RatMatrix& g) {
  for (size_t a = 0; a < dec.blocks.size(); ++a)
    for (size_t b = a + 1; b < dec.blocks.size(); ++b)
      for (const RatVec& x : dec.blocks[a].basis)
        for (const RatVec& y : dec.blocks[b].basis)
          if (bilinear(g, x, y) != 0)
            dec.checks.fail("blocks " + dec.blocks[a].label + " and " +
                            dec.blocks[b].label + " not orthogonal");
}

} // namespace

const BranchBlock& BranchDecomposition::block(const std::string& label) const {
  for (const BranchBlock& b : blocks)
    if (b.label == label) return b;
  throw std::invalid_argument("no block labelled " + label);
}

long BranchDecomposition::total_dim() const {
  long d = 0;
  for (const BranchBlock& b : blocks) d += long(b.basis.size());
  return d;
}

std::pair<Rat, Rat> branch_gram_A(int n, const Rat& m) {
  const Rat d1 = m - (n - 4);
  const Rat d2 = m - (2 * n - 5);
  if (d1 == 0 || d2 == 0) throw PoleParameter("w vectors undefined for m in {n-4, 2n-5}");
  const Rat den = d1 * d2;
  Rat alpha = (m * m + (5 - 2 * n) * m - 2) * (m - (n - 3)) / den;
  Rat beta = -(m - (2 * n - 7)) * (m - (n - 3)) / den;
  return {alpha, beta};
}

std::pair<Rat, Rat> branch_gram_D(int n, const Rat& m) {
  const Rat f1 = m - (2 * n - 9);
  const Rat f2 = 4 * n + 4 * n * m - 12 * m - 3 - m * m;
  const Rat f3 = m - (4 * n - 11);
  const Rat f4 = m - (2 * n - 7);
  Rat alpha = -2 * f1 * f2 * f3 * f4;
  Rat beta = -4 * f1 * f4 * (m - (4 * n - 15)) * f3;
  return {alpha, beta};
}

BranchDecomposition branch_A(const CoxeterSystem& sys, const Rat& m) {
  if (sys.spec.family != Family::A || sys.spec.rank < 2)
    throw UnsupportedType("branching needs type A of rank at least 2");
  const int n = sys.spec.rank + 1;
  if (m == n - 4 || m == 2 * n - 5)
    throw PoleParameter("w vectors undefined for m in {n-4, 2n-5}");
  const int N = sys.num_reflections();
  auto t = [&](int i, int j) { return sys.transposition_index(i, j); };

  BranchDecomposition dec;
  BranchBlock inner{"V_{n-1}", {}};
  RatVec vcheck(size_t(N), Rat(0));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      inner.basis.push_back(unit(N, t(i, j)));
      vcheck[size_t(t(i, j))] = 1;
    }

  const Rat d1 = m - (n - 4);
  const Rat d2 = m - (2 * n - 5);
  std::vector<RatVec> w0(size_t(n - 1)), w1(size_t(n - 1));
  for (int k = 1; k <= n - 1; ++k) {
    RatVec v = unit(N, t(k, n));
    for (int i = 1; i <= n - 1; ++i)
      if (i != k) v[size_t(t(i, k))] = 1 / d1;
    w0[size_t(k - 1)] = v;
    w1[size_t(k - 1)] = vec_add(v, vec_scale(2 / (d1 * d2), vcheck));
  }

  BranchBlock diff{"U_{n-1}", {}};
  for (int k = 0; k + 1 < n - 1; ++k) diff.basis.push_back(vec_sub(w0[size_t(k)], w0[size_t(k + 1)]));
  RatVec wsum = w1[0];
  for (int k = 1; k < n - 1; ++k) wsum = vec_add(wsum, w1[size_t(k)]);
  BranchBlock line{"S_{n-1}", {wsum}};
  dec.blocks = {inner, diff, line};

  auto [alpha, beta] = branch_gram_A(n, m);
  dec.alpha = alpha;
  dec.beta = beta;

  if (long(inner.basis.size()) != long(n - 1) * (n - 2) / 2 || long(diff.basis.size()) != n - 2)
    dec.checks.fail("unexpected block dimensions");
  check_joint_span(dec, N);

  std::vector<int> parabolic;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) parabolic.push_back(t(i, j));
  check_stability(dec, sys, parabolic, m);

  // permutation (Burau) action on the w1 vectors
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      RatMatrix op = tau(sys, t(i, j), m);
      for (int k = 1; k <= n - 1; ++k) {
        const RatVec& wk = w1[size_t(k - 1)];
        const RatVec& expect = k == i ? w1[size_t(j - 1)] : k == j ? w1[size_t(i - 1)] : wk;
        if (op.apply(wk) != expect)
          dec.checks.fail("t_{" + std::to_string(i) + std::to_string(j) +
                          "} does not permute w1_{" + std::to_string(k) + "n}");
      }
    }

  RatMatrix g = form_matrix(sys, m);
  for (int k = 0; k < n - 1; ++k)
    for (int l = 0; l < n - 1; ++l)
      if (bilinear(g, w1[size_t(k)], w1[size_t(l)]) != (k == l ? alpha : beta))
        dec.checks.fail("w1 Gram entry (" + std::to_string(k + 1) + "," +
                        std::to_string(l + 1) + ") off");
  check_block_orthogonality(dec, g);
  return dec;
}

BranchDecomposition branch_D(const CoxeterSystem& sys, const Rat& m) {
  if (sys.spec.family != Family::D)
    throw UnsupportedType("branching needs type D");
  const int n = sys.spec.rank;
  if (m == 4 * n - 11 || m == 2 * n - 9)
    throw PoleParameter("q vectors undefined for m in {4n-11, 2n-9}");
  const int N = sys.num_reflections();
  auto t = [&](int i, int j) { return sys.d_reflection_index(i, j, false); };
  auto tp = [&](int i, int j) { return sys.d_reflection_index(i, j, true); };

  BranchDecomposition dec;
  BranchBlock inner{"V_{n-1}", {}};
  RatVec usum(size_t(N), Rat(0));
  for (int r = 1; r <= n - 1; ++r)
    for (int s = r + 1; s <= n - 1; ++s) {
      inner.basis.push_back(unit(N, t(r, s)));
      inner.basis.push_back(unit(N, tp(r, s)));
      usum[size_t(t(r, s))] = 1;
      usum[size_t(tp(r, s))] = 1;
    }

  const Rat a1 = (4 * n - 11) - m;
  const Rat a2 = (2 * n - 9) - m;
  std::vector<RatVec> w(size_t(n - 1)), q(size_t(n - 1));
  for (int k = 1; k <= n - 1; ++k) {
    RatVec uk(size_t(N), Rat(0));
    for (int i = 1; i <= n - 1; ++i)
      if (i != k) {
        uk[size_t(t(i, k))] = 1;
        uk[size_t(tp(i, k))] = 1;
      }
    RatVec wk(size_t(N), Rat(0));
    wk[size_t(tp(k, n))] = 1;
    wk[size_t(t(k, n))] = -1;
    RatVec qk(size_t(N), Rat(0));
    qk[size_t(t(k, n))] = a1 * a2;
    qk[size_t(tp(k, n))] = a1 * a2;
    qk = vec_add(qk, vec_scale(-2 * a1, uk));
    qk = vec_add(qk, vec_scale(Rat(8), usum));
    w[size_t(k - 1)] = wk;
    q[size_t(k - 1)] = qk;
  }

  BranchBlock wblock{"U^D_{n-1}", w};
  BranchBlock qdiff{"U^A_{n-1}", {}};
  for (int k = 0; k + 1 < n - 1; ++k) qdiff.basis.push_back(vec_sub(q[size_t(k)], q[size_t(k + 1)]));
  RatVec qsum = q[0];
  for (int k = 1; k < n - 1; ++k) qsum = vec_add(qsum, q[size_t(k)]);
  BranchBlock line{"S_{n-1}", {qsum}};
  dec.blocks = {inner, wblock, qdiff, line};

  auto [alpha, beta] = branch_gram_D(n, m);
  dec.alpha = alpha;
  dec.beta = beta;

  if (long(inner.basis.size()) != long(n - 1) * (n - 2) || long(wblock.basis.size()) != n - 1 ||
      long(qdiff.basis.size()) != n - 2)
    dec.checks.fail("unexpected block dimensions");
  check_joint_span(dec, N);

  std::vector<int> parabolic;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      parabolic.push_back(t(i, j));
      parabolic.push_back(tp(i, j));
    }
  check_stability(dec, sys, parabolic, m);

  // signed permutation action on the w_k and plain permutation on the q_k
  std::vector<RatMatrix> diffs;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      RatMatrix plain = tau(sys, t(i, j), m);
      RatMatrix primed = tau(sys, tp(i, j), m);
      for (int k = 1; k <= n - 1; ++k) {
        int other = k == i ? j : k == j ? i : k;
        const RatVec& qk = q[size_t(k - 1)];
        const RatVec& wk = w[size_t(k - 1)];
        if (plain.apply(qk) != q[size_t(other - 1)] || primed.apply(qk) != q[size_t(other - 1)])
          dec.checks.fail("q_" + std::to_string(k) + " not permuted by pair {" +
                          std::to_string(i) + "," + std::to_string(j) + "}");
        if (plain.apply(wk) != w[size_t(other - 1)])
          dec.checks.fail("w_" + std::to_string(k) + " not permuted by t_{" +
                          std::to_string(i) + std::to_string(j) + "}");
        const RatVec primed_expect =
            other == k ? wk : vec_scale(Rat(-1), w[size_t(other - 1)]);
        if (primed.apply(wk) != primed_expect)
          dec.checks.fail("w_" + std::to_string(k) + " sign action off under t'_{" +
                          std::to_string(i) + std::to_string(j) + "}");
      }
      diffs.push_back(plain - primed);
    }

  // q-span = joint kernel of the generator differences
  RatMatrix stacked = stack_rows(diffs);
  if (long(stacked.kernel_basis().size()) != n - 1)
    dec.checks.fail("joint kernel of t - t' differences has wrong dimension");
  if (RatMatrix::from_rows(q).rank() != n - 1)
    dec.checks.fail("q vectors dependent");
  for (const RatMatrix& d : diffs)
    for (const RatVec& qk : q)
      if (!vec_is_zero(d.apply(qk)))
        dec.checks.fail("q vector escapes the joint kernel");

  RatMatrix g = form_matrix(sys, m);
  for (int k = 0; k < n - 1; ++k)
    for (int l = 0; l < n - 1; ++l) {
      if (bilinear(g, w[size_t(k)], w[size_t(l)]) != (k == l ? 2 * (m - 1) : Rat(0)))
        dec.checks.fail("w Gram entry (" + std::to_string(k + 1) + "," +
                        std::to_string(l + 1) + ") off");
      if (bilinear(g, q[size_t(k)], q[size_t(l)]) != (k == l ? alpha : beta))
        dec.checks.fail("q Gram entry (" + std::to_string(k + 1) + "," +
                        std::to_string(l + 1) + ") off");
    }
  check_block_orthogonality(dec, g);
  return dec;
}

VerifyResult verify_discriminant_recursion(Family family, int max_rank) {
  VerifyResult res;
  long max_points = 0;
  if (family == Family::A) {
    if (max_rank < 2) throw std::invalid_argument("max_rank must be at least 2");
    Poly prev = discriminant(build_system(TypeSpec{Family::A, 1}));
    for (int rank = 2; rank <= max_rank; ++rank) {
      const int n = rank + 1;
      Poly cur = discriminant(build_system(TypeSpec{Family::A, rank}));
      // cleared of the w1 denominators, both sides have this degree
      const long bound = long(rank) * (rank + 1) / 2 + 2 * (n - 1);
      const long points = std::max<long>(bound + 1, 8);
      max_points = std::max(max_points, points);
      long checked = 0;
      for (long v = 2; checked < points; ++v) {
        if (v == n - 4 || v == 2 * n - 5) continue;
        const Rat m(v);
        auto [alpha, beta] = branch_gram_A(n, m);
        const Rat block_disc = rat_pow(alpha - beta, n - 2) * (alpha + (n - 2) * beta);
        if (cur.eval(m) != prev.eval(m) * block_disc) {
          res.fail("A rank " + std::to_string(rank) + " recursion fails at m=" + std::to_string(v));
          return res;
        }
        const Rat closed = rat_pow(m + 1, n - 2) * rat_pow(m - (n - 3), n - 1) *
                           (m - (2 * n - 3)) /
                           (rat_pow(m - (n - 4), n - 2) * (m - (2 * n - 5)));
        if (block_disc != closed) {
          res.fail("A rank " + std::to_string(rank) + " block discriminant differs from its closed form at m=" +
                   std::to_string(v));
          return res;
        }
        ++checked;
      }
      prev = cur;
    }
    res.detail = "A ranks 2.." + std::to_string(max_rank) + ", up to " +
                 std::to_string(max_points) + " points per rank";
  } else if (family == Family::D) {
    if (max_rank < 4) throw std::invalid_argument("max_rank must be at least 4");
    // the rank-3 inner system is a relabelled A_3
    Poly prev = discriminant(build_system(TypeSpec{Family::A, 3}));
    for (int n = 4; n <= max_rank; ++n) {
      Poly cur = discriminant(build_system(TypeSpec{Family::D, n}));
      const long bound = long(n - 1) * (n + 4);
      const long points = std::max<long>(bound + 1, 8);
      max_points = std::max(max_points, points);
      long checked = 0;
      for (long v = 2; checked < points; ++v) {
        if (v == 4 * n - 11 || v == 2 * n - 9) continue;
        const Rat m(v);
        auto [alpha, beta] = branch_gram_D(n, m);
        if (alpha - beta !=
            2 * (m + 3) * (m - (2 * n - 7)) * (m - (2 * n - 9)) * rat_pow(m - (4 * n - 11), 2)) {
          res.fail("D_" + std::to_string(n) + " alpha-beta product form fails at m=" + std::to_string(v));
          return res;
        }
        if (alpha + (n - 2) * beta !=
            2 * (m - (4 * n - 7)) * (m - (2 * n - 7)) * (m - (4 * n - 11)) * rat_pow(m - (2 * n - 9), 2)) {
          res.fail("D_" + std::to_string(n) + " alpha+(n-2)beta product form fails at m=" + std::to_string(v));
          return res;
        }
        const Rat w_disc = rat_pow(2 * (m - 1), n - 1);
        const Rat q_disc = rat_pow(alpha - beta, n - 2) * (alpha + (n - 2) * beta);
        // the (v,v') -> (w,q) change of basis has determinant -2A per index
        const Rat change = ((4 * n - 11) - m) * ((2 * n - 9) - m) * 2;
        if (cur.eval(m) * rat_pow(change, 2 * (n - 1)) != prev.eval(m) * w_disc * q_disc) {
          res.fail("D rank " + std::to_string(n) + " recursion fails at m=" + std::to_string(v));
          return res;
        }
        ++checked;
      }
      prev = cur;
    }
    res.detail = "D ranks 4.." + std::to_string(max_rank) + ", up to " +
                 std::to_string(max_points) + " points per rank";
  } else {
    throw UnsupportedType("discriminant recursion covers families A and D");
  }
  return res;
}

} // namespace krammer
