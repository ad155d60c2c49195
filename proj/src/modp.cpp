#include "krammer/modp.hpp"

#include "krammer/errors.hpp"

#include <deque>
#include <string>

namespace krammer {

namespace {

int mod_pow(int base, int e, int p) {
  long long r = 1, b = base % p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return int(r);
}

} // namespace

void validate_prime(int p) {
  if (p < 5) throw BadPrime("modulus must be at least 5");
  if (p > 251) throw BadPrime("modulus must fit a byte entry (at most 251)");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw BadPrime(std::to_string(p) + " is not prime");
}

PrimeFieldMatrix reduce_mod_p(const RatMatrix& mat, int p) {
  validate_prime(p);
  PrimeFieldMatrix out(p, mat.rows(), mat.cols());
  for (int i = 0; i < mat.rows(); ++i)
    for (int j = 0; j < mat.cols(); ++j) {
      const Rat& v = mat.at(i, j);
      unsigned long num = mpz_fdiv_ui(v.get_num().get_mpz_t(), unsigned(p));
      unsigned long den = mpz_fdiv_ui(v.get_den().get_mpz_t(), unsigned(p));
      if (den == 0) throw BadPrime("denominator divisible by " + std::to_string(p));
      out.at(i, j) = uint8_t(num * mod_pow(int(den), p - 2, p) % unsigned(p));
    }
  return out;
}

PrimeFieldMatrix pf_mul(const PrimeFieldMatrix& x, const PrimeFieldMatrix& y) {
  if (x.p != y.p || x.cols != y.rows) throw SizeMismatch("product shape or modulus mismatch");
  const int n = x.rows, k = x.cols, m = y.cols, p = x.p;
  PrimeFieldMatrix out(p, n, m);
  std::vector<int32_t> acc(size_t(m), 0);
  for (int i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const uint8_t* xi = &x.a[size_t(i) * k];
    for (int t = 0; t < k; ++t) {
      const int32_t f = xi[t];
      if (!f) continue;
      const uint8_t* yt = &y.a[size_t(t) * m];
      for (int j = 0; j < m; ++j) acc[size_t(j)] += f * yt[j];
    }
    uint8_t* oi = &out.a[size_t(i) * m];
    for (int j = 0; j < m; ++j) oi[j] = uint8_t(acc[size_t(j)] % p);
  }
  return out;
}

PrimeFieldMatrix pf_bracket(const PrimeFieldMatrix& x, const PrimeFieldMatrix& y) {
  if (x.rows != x.cols || y.rows != y.cols || x.rows != y.rows || x.p != y.p)
    throw SizeMismatch("bracket needs square matrices of one size and modulus");
  PrimeFieldMatrix xy = pf_mul(x, y), yx = pf_mul(y, x);
  const int p = x.p;
  for (size_t i = 0; i < xy.a.size(); ++i) xy.a[i] = uint8_t((xy.a[i] + p - yx.a[i]) % p);
  return xy;
}

ClosureBasis::ClosureBasis(int p, int n) : p_(p), n_(n), len_(n * n) {
  validate_prime(p);
  row_of_pivot_.assign(size_t(len_), -1);
  inv_.assign(size_t(p), 0);
  for (int v = 1; v < p; ++v) inv_[size_t(v)] = uint8_t(mod_pow(v, p - 2, p));
}

int ClosureBasis::insert(const std::vector<uint8_t>& v) {
  // 32-bit work vector; eliminations only subtract, and
  // len * (p-1)^2 + p stays well under 2^31 for len <= 14400, p <= 251
  std::vector<int32_t> w(v.begin(), v.end());
  for (int j = 0; j < len_; ++j) {
    int32_t r = w[size_t(j)] % p_;
    if (r < 0) r += p_;
    if (r == 0) continue;
    const int owner = row_of_pivot_[size_t(j)];
    if (owner < 0) {
      std::vector<uint8_t> nrow(size_t(len_), 0);
      const int32_t scale = inv_[size_t(r)];
      for (int k = j; k < len_; ++k) {
        int32_t t = w[size_t(k)] % p_;
        if (t < 0) t += p_;
        nrow[size_t(k)] = uint8_t(t * scale % p_);
      }
      pivot_.push_back(j);
      row_of_pivot_[size_t(j)] = int(rows_.size());
      rows_.push_back(std::move(nrow));
      return int(rows_.size()) - 1;
    }
    const uint8_t* base = rows_[size_t(owner)].data();
    for (int k = j; k < len_; ++k) w[size_t(k)] -= r * base[k];
  }
  return -1;
}

bool ClosureBasis::echelon_ok() const {
  std::vector<char> seen(size_t(len_), 0);
  for (size_t i = 0; i < rows_.size(); ++i) {
    const int pv = pivot_[i];
    if (seen[size_t(pv)] || rows_[i][size_t(pv)] != 1) return false;
    if (row_of_pivot_[size_t(pv)] != int(i)) return false;
    seen[size_t(pv)] = 1;
    for (int j = 0; j < pv; ++j)
      if (rows_[i][size_t(j)] != 0) return false;
    for (int j = 0; j < len_; ++j)
      if (rows_[i][size_t(j)] >= p_) return false;
  }
  return true;
}

ClosureResult closure_dimension(const std::vector<PrimeFieldMatrix>& generators,
                                long budget, const ClosureProgress& progress) {
  if (generators.empty()) return {0, true, 0};
  const int n = generators.front().rows;
  const int p = generators.front().p;
  for (const PrimeFieldMatrix& g : generators)
    if (g.rows != n || g.cols != n || g.p != p)
      throw SizeMismatch("closure generators must share size and modulus");

  const long full = long(n) * n;
  ClosureBasis basis(p, n);
  // the queue holds basis row indices: a reduced representative differs from
  // the raw bracket by vectors already in the span, so bracketing it against
  // the original generators closes the same algebra without keeping the raw
  // bracket matrices alive
  std::deque<int> pending;
  for (const PrimeFieldMatrix& g : generators)
    if (int idx = basis.insert(g.a); idx >= 0) {
      pending.push_back(idx);
      if (progress) progress(basis.dimension(), full);
    }

  ClosureResult res;
  PrimeFieldMatrix x(p, n, n);
  while (!pending.empty() && basis.dimension() < full) {
    x.a = basis.row(pending.front());
    pending.pop_front();
    for (const PrimeFieldMatrix& g : generators) {
      if (budget >= 0 && res.brackets >= budget) {
        res.dimension = basis.dimension();
        res.saturated = false;
        return res;
      }
      PrimeFieldMatrix b = pf_bracket(x, g);
      ++res.brackets;
      if (int idx = basis.insert(b.a); idx >= 0) {
        if (progress) progress(basis.dimension(), full);
        pending.push_back(idx);
        if (basis.dimension() >= full) break;
      }
    }
  }
  res.dimension = basis.dimension();
  res.saturated = true;
  return res;
}

} // namespace krammer
