#pragma once

#include "krammer/coxeter.hpp"
#include "krammer/matrix.hpp"
#include "krammer/verify.hpp"

#include <string>
#include <utility>
#include <vector>

namespace krammer {

struct BranchBlock {
  std::string label;
  std::vector<RatVec> basis;
};

// Decomposition of V under the parabolic subalgebra generated by the t_s
// with s not involving the last index n. Construction verifies that the
// blocks are stable, jointly span V, are mutually orthogonal under the
// invariant form, and carry the displayed permutation actions and Gram
// values; failures land in `checks`.
struct BranchDecomposition {
  std::vector<BranchBlock> blocks;
  // Gram entries (x_k|x_k), (x_k|x_l) of the distinguished complement
  // vectors (w^1_{kn} in type A, q_k in type D).
  Rat alpha, beta;
  VerifyResult checks;

  const BranchBlock& block(const std::string& label) const;
  long total_dim() const;
};

// Gram entries (diagonal, off-diagonal) of the w^1_{kn} vectors for A_{n-1}
// on n strands. Throws PoleParameter for m in {n-4, 2n-5}.
std::pair<Rat, Rat> branch_gram_A(int n, const Rat& m);
// Gram entries of the q_k vectors for D_n; polynomial in m.
std::pair<Rat, Rat> branch_gram_D(int n, const Rat& m);

// V = V_{n-1} + U_{n-1} + S_{n-1} for type A_{n-1}, n >= 3:
//   v'_k  = sum of v_{ik}, i <= n-1, i != k
//   w0_kn = v_{kn} + v'_k / (m-n+4)
//   w1_kn = w0_kn + 2 vcheck / ((m-n+4)(m-2n+5)),  vcheck = sum of inner v's
// U is spanned by consecutive w-differences, S by the w1 sum, and the w1
// vectors carry the unreduced Burau action t_ik.w1_kn = w1_in.
// Throws PoleParameter for m in {n-4, 2n-5}.
BranchDecomposition branch_A(const CoxeterSystem& sys, const Rat& m);

// V = V_{n-1} + U^D_{n-1} + U^A_{n-1} + S_{n-1} for type D_n:
//   w_k = v'_{kn} - v_{kn}
//   q_k = (4n-m-11)(2n-m-9)(v_{kn} + v'_{kn}) - 2(4n-m-11) u_k + 8u
// with u_k, u the inner column/total sums over both root families. U^D is
// spanned by the w_k (signed permutation action), U^A by consecutive
// q-differences, S by the q sum; U^A + S is the joint kernel of the
// t_{ij} - t'_{ij}. Throws PoleParameter for m in {4n-11, 2n-9}.
BranchDecomposition branch_D(const CoxeterSystem& sys, const Rat& m);

// Certifies, rank by rank, that the ambient discriminant factors through the
// restriction: disc(rank r) times the square of the change-of-basis
// determinant equals disc(rank r-1) times the block Gram determinants.
// Checked by exact evaluation at enough non-pole integer points to pin the
// cleared-denominator polynomial identity (never fewer than 8).
VerifyResult verify_discriminant_recursion(Family family, int max_rank);

} // namespace krammer
