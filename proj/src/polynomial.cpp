#include "krammer/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace krammer {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::from_coeffs(std::vector<Rat> c) {
  Poly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return from_coeffs(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return from_coeffs(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) c[i + j] += c_[i] * o.c_[j];
  }
  return from_coeffs(std::move(c));
}

Poly Poly::scaled(const Rat& s) const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v *= s;
  return from_coeffs(std::move(c));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  Poly r(Rat(1)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::shifted(const Rat& a) const {
  // Horner: p(x + a) accumulated highest coefficient first.
  Poly r;
  Poly lin = from_coeffs({a, Rat(1)});
  for (size_t i = c_.size(); i-- > 0;) r = r * lin + Poly(c_[i]);
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[k];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1 && k > 0);
    if (!unit) os << rat_to_string(a);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rat> rem(p.coeffs());
  int dd = d.degree();
  Rat lead = d.coeff(dd);
  if (int(rem.size()) - 1 < dd) return {Poly(), p};
  std::vector<Rat> quo(rem.size() - dd, Rat(0));
  for (int k = int(rem.size()) - 1; k >= dd; --k) {
    if (rem[k] == 0) continue;
    Rat f = rem[k] / lead;
    quo[k - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.coeff(j);
  }
  return {Poly::from_coeffs(std::move(quo)), Poly::from_coeffs(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = b;
    b = r;
  }
  if (!a.is_zero() && a.coeff(a.degree()) != 1) a = a.scaled(1 / a.coeff(a.degree()));
  return a;
}

void FactoredPoly::add_root(const Rat& root, int mult) {
  for (auto& [r, e] : factors)
    if (r == root) {
      e += mult;
      return;
    }
  factors.emplace_back(root, mult);
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
}

int FactoredPoly::multiplicity(const Rat& root) const {
  for (const auto& [r, e] : factors)
    if (r == root) return e;
  return 0;
}

int FactoredPoly::degree() const {
  int d = 0;
  for (const auto& [r, e] : factors) d += e;
  return d;
}

Poly FactoredPoly::expand() const {
  Poly p{Rat(lead)};
  for (const auto& [r, e] : factors) p = p * Poly::from_coeffs({-r, Rat(1)}).pow(e);
  return p;
}

std::string FactoredPoly::to_string(const std::string& var) const {
  std::ostringstream os;
  if (lead != 1) os << rat_to_string(lead);
  for (const auto& [r, e] : factors) {
    if (r == 0)
      os << var;
    else if (r > 0)
      os << "(" << var << "-" << rat_to_string(r) << ")";
    else
      os << "(" << var << "+" << rat_to_string(-r) << ")";
    if (e > 1) os << "^" << e;
  }
  if (factors.empty() && lead == 1) os << "1";
  return os.str();
}

std::optional<FactoredPoly> factor_integer_roots(const Poly& p, long bound) {
  if (p.is_zero()) return std::nullopt;
  FactoredPoly f;
  Poly rest = p;
  for (long r = -bound; r <= bound && rest.degree() > 0; ++r) {
    Rat root(r);
    int mult = 0;
    while (rest.degree() > 0 && rest.eval(root) == 0) {
      rest = poly_divmod(rest, Poly::from_coeffs({-root, Rat(1)})).first;
      ++mult;
    }
    if (mult > 0) f.add_root(root, mult);
  }
  if (rest.degree() != 0) return std::nullopt;
  f.lead = rest.coeff(0);
  return f;
}

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;
  explicit Scanner(const std::string& str) : s(str) {}
  void skip() {
    while (i < s.size() && (std::isspace(unsigned(s[i])) || s[i] == '*')) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  void expect(char c) {
    if (peek() != c) throw std::invalid_argument("expected '" + std::string(1, c) + "' in factored polynomial");
    ++i;
  }
  Rat number() {
    skip();
    size_t j = i;
    while (j < s.size() && (std::isdigit(unsigned(s[j])) || s[j] == '/')) ++j;
    if (j == i) throw std::invalid_argument("expected number in factored polynomial");
    Rat v = rat_from_string(s.substr(i, j - i));
    i = j;
    return v;
  }
  int exponent() {
    if (peek() != '^') return 1;
    ++i;
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit(unsigned(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("expected exponent");
    int e = std::stoi(s.substr(i, j - i));
    i = j;
    return e;
  }
};

} // namespace

FactoredPoly parse_factored(const std::string& s) {
  FactoredPoly f;
  Scanner sc(s);
  if (sc.peek() == '-') {
    ++sc.i;
    f.lead = -1;
  }
  if (std::isdigit(unsigned(sc.peek()))) f.lead *= sc.number();
  while (!sc.done()) {
    char c = sc.peek();
    if (c == 'm') {
      ++sc.i;
      f.add_root(Rat(0), sc.exponent());
    } else if (c == '(') {
      ++sc.i;
      sc.expect('m');
      char sign = sc.peek();
      if (sign != '+' && sign != '-') throw std::invalid_argument("expected sign inside factor");
      ++sc.i;
      Rat k = sc.number();
      sc.expect(')');
      f.add_root(sign == '-' ? k : Rat(-k), sc.exponent());
    } else {
      throw std::invalid_argument("unexpected character in factored polynomial: " + std::string(1, c));
    }
  }
  return f;
}

std::vector<Rat> rational_roots(const Poly& p) {
  if (p.degree() < 1) return {};
  Int clear(1);
  for (const Rat& c : p.coeffs()) clear = lcm(clear, c.get_den());
  std::vector<Int> a;
  for (const Rat& c : p.coeffs()) a.push_back(Rat(c * clear).get_num());

  std::vector<Rat> roots;
  size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low + 1 >= a.size()) return roots;

  auto divisors = [](const Int& v) {
    std::vector<Int> ds;
    Int n = abs(v);
    for (Int d(1); d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    return ds;
  };
  const Poly stripped = [&] {
    std::vector<Rat> c(a.begin() + long(low), a.end());
    return Poly::from_coeffs(c);
  }();
  for (const Int& num : divisors(a[low]))
    for (const Int& den : divisors(a.back()))
      for (int sign : {1, -1}) {
        Rat cand(sign * num);
        cand /= den;
        if (stripped.eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Poly cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  // x^n - 1 divided by the cyclotomics of the proper divisors
  std::vector<Rat> c(size_t(n) + 1, Rat(0));
  c[0] = -1;
  c[size_t(n)] = 1;
  Poly q = Poly::from_coeffs(c);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) {
      auto [quot, rem] = poly_divmod(q, cyclotomic(d));
      if (!rem.is_zero()) throw std::logic_error("cyclotomic division not exact");
      q = quot;
    }
  return q;
}

Poly cos_minimal_poly(int n) {
  if (n == 1) return Poly::from_coeffs({Rat(-2), Rat(1)});
  if (n == 2) return Poly::from_coeffs({Rat(2), Rat(1)});
  const Poly phi = cyclotomic(n);
  const int half = phi.degree() / 2;
  // phi is palindromic of even degree 2k: phi(z)/z^k is an integer
  // combination of the z^j + z^-j, each of which is q_j(z + 1/z) for the
  // Chebyshev-like family q_0 = 2, q_1 = x, q_{j+1} = x q_j - q_{j-1}.
  Poly result = Poly(phi.coeff(half));
  Poly qprev = Poly(Rat(2));
  Poly qcur = Poly::x();
  for (int j = 1; j <= half; ++j) {
    result = result + qcur.scaled(phi.coeff(half + j));
    Poly qnext = Poly::x() * qcur - qprev;
    qprev = qcur;
    qcur = qnext;
  }
  return result;
}

} // namespace krammer
