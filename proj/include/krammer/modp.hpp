#pragma once

#include "krammer/matrix.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace krammer {

// Dense matrix over F_p with byte entries. The modulus is capped at 251 so
// an entry always fits one byte.
struct PrimeFieldMatrix {
  int p = 0;
  int rows = 0, cols = 0;
  std::vector<uint8_t> a;  // row-major, entries in [0, p)

  PrimeFieldMatrix() = default;
  PrimeFieldMatrix(int p_, int rows_, int cols_)
      : p(p_), rows(rows_), cols(cols_), a(size_t(rows_) * size_t(cols_), 0) {}

  uint8_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
  uint8_t at(int i, int j) const { return a[size_t(i) * cols + j]; }
  bool operator==(const PrimeFieldMatrix&) const = default;
};

// Rejects non-primes, p < 5, and p > 251.
void validate_prime(int p);

// Entry-wise reduction num * den^-1 mod p. Throws BadPrime for an invalid
// modulus or a denominator divisible by p.
PrimeFieldMatrix reduce_mod_p(const RatMatrix& mat, int p);

PrimeFieldMatrix pf_mul(const PrimeFieldMatrix& x, const PrimeFieldMatrix& y);
PrimeFieldMatrix pf_bracket(const PrimeFieldMatrix& x, const PrimeFieldMatrix& y);

// Echelonized span of flattened n x n matrices over F_p. Rows keep a 1 at
// their pivot column and zeros strictly before it; pivot columns are
// distinct. Incoming vectors are reduced with lazily-normalized 32-bit
// arithmetic, safe for n*n up to 14400 at p <= 251.
class ClosureBasis {
public:
  ClosureBasis(int p, int n);

  // Reduces v against the span; inserts the normalized remainder if nonzero.
  // Returns the inserted row index, or -1 if v was already in the span.
  int insert(const std::vector<uint8_t>& v);

  long dimension() const { return long(rows_.size()); }
  int side() const { return n_; }
  int modulus() const { return p_; }
  const std::vector<uint8_t>& row(int i) const { return rows_[size_t(i)]; }
  bool echelon_ok() const;

private:
  int p_, n_, len_;
  std::vector<std::vector<uint8_t>> rows_;
  std::vector<int> pivot_;         // pivot column of each row
  std::vector<int> row_of_pivot_;  // column -> row index or -1
  std::vector<uint8_t> inv_;       // multiplicative inverses mod p
};

struct ClosureResult {
  long dimension = 0;
  bool saturated = false;
  long brackets = 0;  // bracket evaluations performed
};

// Called after each inserted element with (current dimension, n*n).
using ClosureProgress = std::function<void(long, long)>;

// Dimension of the Lie algebra generated by the given matrices: the span is
// grown by bracketing each newly inserted element against the original
// generators until a fixpoint, early-exiting at the full n*n. A non-negative
// budget bounds the number of brackets; hitting it reports saturated=false.
// Throws SizeMismatch on inconsistent sizes or moduli.
ClosureResult closure_dimension(const std::vector<PrimeFieldMatrix>& generators,
                                long budget = -1,
                                const ClosureProgress& progress = {});

} // namespace krammer
