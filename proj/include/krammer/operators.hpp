#pragma once

#include "krammer/coxeter.hpp"
#include "krammer/matrix.hpp"
#include "krammer/verify.hpp"

namespace krammer {

// The infinitesimal operator t_s on V = span{v_u : u a reflection}:
//   t_s v_s = m v_s
//   t_s v_u = v_u            if su = us, u != s
//   t_s v_u = v_{sus} - v_s  otherwise
RatMatrix tau(const CoxeterSystem& sys, int s, const Rat& m);

// p_s = (conjugation action of s) - t_s; supported on row s:
//   p_s v_s = (1-m) v_s, p_s v_u = 0 (commuting), p_s v_u = v_s (else)
RatMatrix p_op(const CoxeterSystem& sys, int s, const Rat& m);

// Permutation matrix of v_u -> v_{sus}.
RatMatrix w_action(const CoxeterSystem& sys, int s);

// For every s: (t_s - m)(t_s - 1)(t_s + 1) = 0, the m-eigenspace is the line
// v_s, and the eigenvalue multiplicities are (m: 1, 1: c + c'/2, -1: c'/2).
// Throws DegenerateParameter for m in {1, -1} where eigenvalues collide.
VerifyResult verify_cubic(const CoxeterSystem& sys, const Rat& m);

// Sum of all t_s is (m + c) Id; each t_s has trace m + c; and with
// v = sum of all v_u, t_s v = (m - 1 - c') v_s + v.
VerifyResult verify_central(const CoxeterSystem& sys, const Rat& m);

// w t_s w^{-1} = t_{wsw} for every pair of reflections (w acting by
// conjugation permutation).
VerifyResult verify_equivariance(const CoxeterSystem& sys, const Rat& m);

// Default sample points for certifying identity-in-m claims by evaluation:
// enough distinct values to pin every polynomial identity of degree <= 3.
std::vector<Rat> default_sample_points();

} // namespace krammer
