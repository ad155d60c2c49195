#pragma once

#include "krammer/rational.hpp"

#include <optional>
#include <vector>

namespace krammer {

using RatVec = std::vector<Rat>;

RatVec vec_add(const RatVec& x, const RatVec& y);
RatVec vec_sub(const RatVec& x, const RatVec& y);
RatVec vec_scale(const Rat& c, const RatVec& x);
bool vec_is_zero(const RatVec& x);

// Dense matrix over Q. Row-major.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {}

  static RatMatrix identity(int n);
  static RatMatrix from_columns(const std::vector<RatVec>& cols);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_integral() const;

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix scaled(const Rat& c) const;
  RatMatrix transpose() const;
  Rat trace() const;

  RatVec apply(const RatVec& x) const;  // matrix * column vector
  RatVec row_vec(int i) const;
  RatVec col_vec(int j) const;

  // Gaussian elimination over Q (exact, first-nonzero pivoting).
  int rank() const;
  int nullity() const { return cols_ - rank(); }
  // Reduced row echelon form; pivot columns appended to *pivots if non-null.
  RatMatrix rref(std::vector<int>* pivots = nullptr) const;
  // Basis of {x : Ax = 0}.
  std::vector<RatVec> kernel_basis() const;
  // Solves A X = B with A of full column rank; nullopt if inconsistent.
  std::optional<RatMatrix> solve(const RatMatrix& b) const;

  // Exact determinant (square): Bareiss on the row-wise integer scaling.
  Rat det() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

RatMatrix stack_rows(const std::vector<RatMatrix>& parts);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

// x^T G y
Rat bilinear(const RatMatrix& g, const RatVec& x, const RatVec& y);

} // namespace krammer
