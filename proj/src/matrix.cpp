#include "krammer/matrix.hpp"

#include <cstdint>
#include <stdexcept>

namespace krammer {

RatVec vec_add(const RatVec& x, const RatVec& y) {
  RatVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

RatVec vec_sub(const RatVec& x, const RatVec& y) {
  RatVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

RatVec vec_scale(const Rat& c, const RatVec& x) {
  RatVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

bool vec_is_zero(const RatVec& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols) {
  if (cols.empty()) return RatMatrix();
  RatMatrix m(int(cols[0].size()), int(cols.size()));
  for (int j = 0; j < m.cols_; ++j) {
    if (int(cols[j].size()) != m.rows_) throw std::invalid_argument("ragged columns");
    for (int i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (int(rows[i].size()) != m.cols_) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool RatMatrix::is_integral() const {
  for (const auto& v : a_)
    if (!is_integer(v)) return false;
  return true;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

namespace {

constexpr long long kFastEntryCap = 1ll << 40;

// Integer matrices with moderate entries multiply through int64; exactness is
// guaranteed by the accumulator bound checked in fast_mul.
bool to_i64(const RatMatrix& m, std::vector<long long>& out, long long& maxabs) {
  out.assign(size_t(m.rows()) * size_t(m.cols()), 0);
  maxabs = 0;
  size_t idx = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j, ++idx) {
      const Rat& q = m.at(i, j);
      if (q.get_den() != 1) return false;
      const mpz_class& n = q.get_num();
      if (!n.fits_slong_p()) return false;
      long long v = n.get_si();
      long long av = v < 0 ? -v : v;
      if (av > kFastEntryCap) return false;
      if (av > maxabs) maxabs = av;
      out[idx] = v;
    }
  return true;
}

bool fast_mul(const RatMatrix& a, const RatMatrix& b, RatMatrix& out) {
  std::vector<long long> x, y;
  long long mx = 0, my = 0;
  if (!to_i64(a, x, mx) || !to_i64(b, y, my)) return false;
  const int n = a.rows(), k = a.cols(), m = b.cols();
  if (__int128(k) * mx * my >= (__int128(1) << 62)) return false;
  std::vector<long long> z(size_t(n) * size_t(m), 0);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      long long v = x[size_t(i) * k + t];
      if (v == 0) continue;
      const long long* yr = &y[size_t(t) * m];
      long long* zr = &z[size_t(i) * m];
      for (int j = 0; j < m; ++j) zr[j] += v * yr[j];
    }
  out = RatMatrix(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) out.at(i, j) = Rat(long(z[size_t(i) * m + j]));
  return true;
}

} // namespace

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
  RatMatrix r;
  if (fast_mul(*this, o, r)) return r;
  r = RatMatrix(rows_, o.cols_);
  Rat tmp;
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        tmp = v * o.at(k, j);
        r.at(i, j) += tmp;
      }
    }
  return r;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rat RatMatrix::trace() const {
  Rat t = 0;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

RatVec RatMatrix::apply(const RatVec& x) const {
  if (int(x.size()) != cols_) throw std::invalid_argument("shape mismatch in apply");
  RatVec r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && x[j] != 0) r[i] += at(i, j) * x[j];
  return r;
}

RatVec RatMatrix::row_vec(int i) const {
  RatVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

RatVec RatMatrix::col_vec(int j) const {
  RatVec r(rows_);
  for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

RatMatrix RatMatrix::rref(std::vector<int>* pivots) const {
  RatMatrix m = *this;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) swap(m.at(p, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

int RatMatrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return int(piv.size());
}

std::vector<RatVec> RatMatrix::kernel_basis() const {
  std::vector<int> piv;
  RatMatrix r = rref(&piv);
  std::vector<bool> is_piv(cols_, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<RatVec> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_piv[c]) continue;
    RatVec v(cols_, Rat(0));
    v[c] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at(int(k), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMatrix> RatMatrix::solve(const RatMatrix& b) const {
  if (b.rows_ != rows_) throw std::invalid_argument("shape mismatch in solve");
  RatMatrix aug(rows_, cols_ + b.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    for (int j = 0; j < b.cols_; ++j) aug.at(i, cols_ + j) = b.at(i, j);
  }
  std::vector<int> piv;
  RatMatrix r = aug.rref(&piv);
  for (int c : piv)
    if (c >= cols_) return std::nullopt;  // inconsistent system
  if (int(piv.size()) != cols_) throw std::logic_error("solve: coefficient matrix not of full column rank");
  RatMatrix x(cols_, b.cols_);
  for (int k = 0; k < cols_; ++k)
    for (int j = 0; j < b.cols_; ++j) x.at(k, j) = r.at(k, cols_ + j);
  return x;
}

Rat RatMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  // Scale each row integral, run fraction-free Bareiss, divide the scales out.
  std::vector<Int> m(size_t(n) * n);
  Int scale_prod = 1;
  for (int i = 0; i < n; ++i) {
    Int l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).get_den().get_mpz_t());
    scale_prod *= l;
    for (int j = 0; j < n; ++j) {
      Rat v = at(i, j) * Rat(l);
      m[size_t(i) * n + j] = v.get_num();
    }
  }
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (m[size_t(i) * n + k] != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) swap(m[size_t(p) * n + j], m[size_t(k) * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = m[size_t(i) * n + j] * m[size_t(k) * n + k] - m[size_t(i) * n + k] * m[size_t(k) * n + j];
        mpz_divexact(m[size_t(i) * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[size_t(i) * n + k] = 0;
    }
    prev = m[size_t(k) * n + k];
  }
  Rat d(m[size_t(n - 1) * n + (n - 1)], scale_prod);
  d.canonicalize();
  return sign > 0 ? d : Rat(-d);
}

RatMatrix stack_rows(const std::vector<RatMatrix>& parts) {
  if (parts.empty()) return RatMatrix();
  int cols = parts[0].cols(), rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("stack_rows: column mismatch");
    rows += p.rows();
  }
  RatMatrix r(rows, cols);
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < cols; ++j) r.at(off + i, j) = p.at(i, j);
    off += p.rows();
  }
  return r;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  return a * b - b * a;
}

Rat bilinear(const RatMatrix& g, const RatVec& x, const RatVec& y) {
  if (int(x.size()) != g.rows() || int(y.size()) != g.cols()) throw std::invalid_argument("bilinear shape mismatch");
  Rat acc = 0;
  for (int i = 0; i < g.rows(); ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (int j = 0; j < g.cols(); ++j)
      if (g.at(i, j) != 0 && y[j] != 0) row += g.at(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

} // namespace krammer
