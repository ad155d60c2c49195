#include "krammer/charpoly.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace krammer {

Poly char_poly_rational(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char poly of non-square matrix");
  const int n = a.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  RatMatrix mk = a;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      RatMatrix t = mk;
      for (int i = 0; i < n; ++i) t.at(i, i) += c[n - k + 1];
      mk = a * t;
    }
    c[n - k] = -mk.trace() / k;
  }
  return Poly::from_coeffs(std::move(c));
}

namespace {

using u64 = uint64_t;

u64 add_m(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 sub_m(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 mul_m(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 pow_m(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = mul_m(r, b, p);
    b = mul_m(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 inv_m(u64 a, u64 p) { return pow_m(a, p - 2, p); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Char poly mod p of an n x n matrix given mod p: similarity reduction to
// upper Hessenberg, then the leading-minor recurrence.
std::vector<u64> char_poly_mod(std::vector<u64> h, int n, u64 p) {
  auto at = [&](int i, int j) -> u64& { return h[size_t(i) * n + j]; };
  for (int k = 0; k + 2 < n; ++k) {
    int piv = -1;
    for (int i = k + 1; i < n; ++i)
      if (at(i, k) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(k + 1, j));
      for (int i = 0; i < n; ++i) std::swap(at(i, piv), at(i, k + 1));
    }
    u64 inv = inv_m(at(k + 1, k), p);
    for (int i = k + 2; i < n; ++i) {
      u64 f = mul_m(at(i, k), inv, p);
      if (f == 0) continue;
      for (int j = k; j < n; ++j) at(i, j) = sub_m(at(i, j), mul_m(f, at(k + 1, j), p), p);
      for (int j = 0; j < n; ++j) at(j, k + 1) = add_m(at(j, k + 1), mul_m(f, at(j, i), p), p);
    }
  }
  // p_k(x) = (x - h_kk) p_{k-1}(x) - sum_i h_ik (prod of subdiagonals) p_{i-1}(x)
  std::vector<std::vector<u64>> pk(n + 1);
  pk[0] = {1};
  for (int k = 1; k <= n; ++k) {
    std::vector<u64>& out = pk[k];
    out.assign(k + 1, 0);
    const std::vector<u64>& prev = pk[k - 1];
    u64 hkk = at(k - 1, k - 1);
    for (int t = 0; t < k; ++t) {
      out[t + 1] = add_m(out[t + 1], prev[t], p);
      out[t] = sub_m(out[t], mul_m(hkk, prev[t], p), p);
    }
    u64 prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = mul_m(prod, at(i, i - 1), p);
      u64 f = mul_m(at(i - 1, k - 1), prod, p);
      if (f == 0) continue;
      const std::vector<u64>& pi = pk[i - 1];
      for (int t = 0; t < i; ++t) out[t] = sub_m(out[t], mul_m(f, pi[t], p), p);
    }
  }
  return pk[n];
}

std::vector<u64> prime_pool(size_t count) {
  static std::vector<u64> pool;
  static u64 next = (u64(1) << 31) - 1;
  while (pool.size() < count) {
    while (!is_prime_u64(next)) --next;
    pool.push_back(next);
    --next;
  }
  return {pool.begin(), pool.begin() + count};
}

} // namespace

Poly char_poly_integer(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char poly of non-square matrix");
  if (!m.is_integral()) throw std::invalid_argument("char_poly_integer requires integer entries");
  const int n = m.rows();
  if (n == 0) return Poly(Rat(1));

  // Hadamard-style bound: |c_k| <= C(n,k) * (sqrt(n) * maxabs)^k.
  Int maxabs = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int v = abs(m.at(i, j).get_num());
      if (v > maxabs) maxabs = v;
    }
  double log2max = double(mpz_sizeinbase(maxabs.get_mpz_t(), 2));
  double bound_bits = n + n * (log2max + 0.5 * std::log2(double(n)) + 1.0) + 16;
  size_t nprimes = size_t(bound_bits / 30.0) + 2;
  std::vector<u64> primes = prime_pool(nprimes);

  std::vector<std::vector<u64>> residues;
  residues.reserve(primes.size());
  for (u64 p : primes) {
    std::vector<u64> h(size_t(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int r = m.at(i, j).get_num() % Int(static_cast<unsigned long>(p));
        if (r < 0) r += Int(static_cast<unsigned long>(p));
        h[size_t(i) * n + j] = r.get_ui();
      }
    residues.push_back(char_poly_mod(std::move(h), n, p));
  }

  Int modulus = 1;
  for (u64 p : primes) modulus *= Int(static_cast<unsigned long>(p));
  std::vector<Rat> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) {
    // incremental CRT across the prime list
    Int acc = Int(static_cast<unsigned long>(residues[0][k]));
    Int mod = Int(static_cast<unsigned long>(primes[0]));
    for (size_t t = 1; t < primes.size(); ++t) {
      Int p(static_cast<unsigned long>(primes[t]));
      Int r(static_cast<unsigned long>(residues[t][k]));
      Int diff = (r - acc) % p;
      if (diff < 0) diff += p;
      Int minv;
      if (mpz_invert(minv.get_mpz_t(), mod.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::logic_error("CRT moduli not coprime");
      acc += mod * ((diff * minv) % p);
      mod *= p;
    }
    if (acc * 2 > modulus) acc -= modulus;
    coeffs[k] = Rat(acc);
  }
  return Poly::from_coeffs(std::move(coeffs));
}

Int det_integral(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  if (!m.is_integral()) throw std::invalid_argument("det_integral requires integer entries");
  Rat d = m.det();
  return d.get_num();
}

bool leading_minors_positive(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minors of non-square matrix");
  if (!m.is_integral()) throw std::invalid_argument("leading_minors_positive requires integer entries");
  const int n = m.rows();
  std::vector<Int> a(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[size_t(i) * n + j] = m.at(i, j).get_num();
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    if (a[size_t(k) * n + k] <= 0) return false;  // k-th leading minor not positive
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a[size_t(i) * n + j] * a[size_t(k) * n + k] - a[size_t(i) * n + k] * a[size_t(k) * n + j];
        mpz_divexact(a[size_t(i) * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[size_t(i) * n + k] = 0;
    }
    prev = a[size_t(k) * n + k];
  }
  return true;
}

} // namespace krammer
