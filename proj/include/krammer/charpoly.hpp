#pragma once

#include "krammer/matrix.hpp"
#include "krammer/polynomial.hpp"

namespace krammer {

// det(xI - M), exact, Faddeev-LeVerrier over Q. O(n^4) rational multiplies;
// fine for small n and used as an independent cross-check.
Poly char_poly_rational(const RatMatrix& m);

// det(xI - M) for integral M: Hessenberg reduction + recurrence modulo enough
// 31-bit primes to cover a Hadamard-style coefficient bound, then CRT with a
// symmetric lift. Throws if M has a non-integer entry.
Poly char_poly_integer(const RatMatrix& m);

// Exact determinant of an integral matrix (fraction-free Bareiss).
Int det_integral(const RatMatrix& m);

// Leading principal minors are all strictly positive. Symmetric integral
// input; runs Bareiss without row swaps, whose pivots are exactly the minors.
// A zero pivot means a zero minor, hence not positive definite.
bool leading_minors_positive(const RatMatrix& m);

} // namespace krammer
