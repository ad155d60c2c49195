#pragma once

#include "krammer/coxeter.hpp"
#include "krammer/matrix.hpp"
#include "krammer/polynomial.hpp"
#include "krammer/verify.hpp"

namespace krammer {

// 0/1 matrix with A[s][u] = 1 iff s != u and s, u do not commute.
RatMatrix noncommuting_adjacency(const CoxeterSystem& sys);

// Gram matrix of the invariant form: (v_s|v_s) = m-1, (v_s|v_u) = -1 for
// non-commuting pairs, 0 for commuting pairs. Equals (m-1)I - A.
RatMatrix form_matrix(const CoxeterSystem& sys, const Rat& m);

// det of the Gram matrix as a polynomial in m: the characteristic polynomial
// of the adjacency matrix evaluated at m-1. Monic of degree #R with integer
// coefficients.
Poly discriminant(const CoxeterSystem& sys);

// Full splitting of the discriminant into integer-rooted linear factors
// (roots are 1 + adjacency eigenvalues, bounded by c'+1 in absolute value).
// Throws NonIntegerRoot if a factor resists.
FactoredPoly factor_discriminant(const CoxeterSystem& sys);

// G is symmetric, every t_s is self-adjoint for G, and p_s acts as
// -(v_s|.) v_s, so p_s/(1-m) is the G-orthogonal projector onto the line
// v_s. The projector sub-checks are skipped (and reported) when m = 1 or
// disc(m) = 0.
VerifyResult verify_selfadjoint(const CoxeterSystem& sys, const Rat& m);

// Sylvester test through Bareiss leading principal minors of the
// denominator-cleared Gram matrix.
bool positive_definite(const CoxeterSystem& sys, const Rat& m);

} // namespace krammer
