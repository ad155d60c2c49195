#include "krammer/coxeter.hpp"

#include "krammer/errors.hpp"
#include "krammer/matrix.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace krammer {

std::string TypeSpec::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::A: os << "A" << rank; break;
    case Family::D: os << "D" << rank; break;
    case Family::E: os << "E" << rank; break;
    case Family::I2: os << "I2(" << i2_order << ")"; break;
  }
  return os.str();
}

TypeSpec TypeSpec::parse(const std::string& s) {
  auto bad = [&]() -> TypeSpec { throw UnsupportedType("unrecognized type: " + s); };
  if (s.empty()) return bad();
  TypeSpec t;
  if (s.rfind("I2(", 0) == 0 && s.back() == ')') {
    t.family = Family::I2;
    t.rank = 2;
    try {
      t.i2_order = std::stoi(s.substr(3, s.size() - 4));
    } catch (...) {
      return bad();
    }
    if (t.i2_order < 2) throw UnsupportedType("I2 parameter must be >= 2: " + s);
    return t;
  }
  char fam = s[0];
  int rank = 0;
  try {
    size_t used = 0;
    rank = std::stoi(s.substr(1), &used);
    if (used + 1 != s.size()) return bad();
  } catch (...) {
    return bad();
  }
  t.rank = rank;
  switch (fam) {
    case 'A':
      t.family = Family::A;
      if (rank < 1) throw UnsupportedType("A rank must be >= 1: " + s);
      break;
    case 'D':
      t.family = Family::D;
      if (rank < 4) throw UnsupportedType("D rank must be >= 4: " + s);
      break;
    case 'E':
      t.family = Family::E;
      if (rank < 6 || rank > 8) throw UnsupportedType("E rank must be 6, 7 or 8: " + s);
      break;
    default:
      return bad();
  }
  return t;
}

namespace {

using Root = std::vector<int>;

long dot(const Root& a, const Root& b) {
  long d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += long(a[i]) * b[i];
  return d;
}

void canonicalize(Root& r) {
  for (int v : r) {
    if (v > 0) return;
    if (v < 0) {
      for (auto& x : r) x = -x;
      return;
    }
  }
}

Root reflect(const Root& alpha, const Root& beta, long alpha_norm) {
  long num = 2 * dot(alpha, beta);
  if (num % alpha_norm != 0) throw std::logic_error("non-integral reflection coefficient");
  long f = num / alpha_norm;
  Root r = beta;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= int(f) * alpha[i];
  return r;
}

std::vector<Root> simple_roots_for(const TypeSpec& spec) {
  std::vector<Root> simples;
  if (spec.family == Family::A) {
    int n = spec.rank + 1;
    for (int k = 0; k < spec.rank; ++k) {
      Root r(n, 0);
      r[k] = 1;
      r[k + 1] = -1;
      simples.push_back(r);
    }
  } else if (spec.family == Family::D) {
    // fork-first numbering: nodes 1 and 2 hang off node 3, then a chain
    int n = spec.rank;
    Root r1(n, 0), r2(n, 0);
    r1[n - 2] = 1;
    r1[n - 1] = -1;  // e_{n-1} - e_n
    r2[n - 2] = 1;
    r2[n - 1] = 1;  // e_{n-1} + e_n
    simples.push_back(r1);
    simples.push_back(r2);
    for (int k = 3; k <= n; ++k) {
      Root r(n, 0);
      r[n - k] = 1;
      r[n - k + 1] = -1;  // e_{n-k+1} - e_{n-k+2}
      simples.push_back(r);
    }
  } else if (spec.family == Family::E) {
    // 8-coordinate realization scaled by 2 to stay integral
    auto pair_root = [&](int i, int j, int si, int sj) {
      Root r(8, 0);
      r[i] = 2 * si;
      r[j] = 2 * sj;
      return r;
    };
    Root a1 = {1, -1, -1, -1, -1, -1, -1, 1};
    simples = {a1, pair_root(0, 1, 1, 1)};
    simples.push_back(pair_root(0, 1, -1, 1));  // e_2 - e_1
    for (int k = 4; k <= spec.rank; ++k) simples.push_back(pair_root(k - 3, k - 2, -1, 1));
  }
  return simples;
}

} // namespace

CoxeterSystem build_system(const TypeSpec& spec) {
  // revalidate so systems built from aggregate-initialized specs are safe
  TypeSpec::parse(spec.to_string());
  CoxeterSystem sys;
  sys.spec = spec;
  if (spec.family == Family::I2) return sys;  // generators + parameter only

  std::vector<Root> simples = simple_roots_for(spec);
  long norm = dot(simples[0], simples[0]);

  std::set<Root> seen;
  std::deque<Root> queue;
  for (Root r : simples) {
    canonicalize(r);
    if (seen.insert(r).second) queue.push_back(r);
  }
  while (!queue.empty()) {
    Root b = queue.front();
    queue.pop_front();
    for (const Root& a : simples) {
      Root r = reflect(a, b, norm);
      canonicalize(r);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }

  sys.roots_.assign(seen.begin(), seen.end());  // std::set is already lex-sorted
  const int n = int(sys.roots_.size());

  for (const Root& a : simples) {
    Root c = a;
    canonicalize(c);
    sys.simples_.push_back(sys.root_index(c));
  }
  sys.simple_roots_ = simples;

  sys.conj_.assign(size_t(n) * n, -1);
  sys.commute_.assign(size_t(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    for (int u = 0; u < n; ++u) {
      Root r = reflect(sys.roots_[s], sys.roots_[u], norm);
      canonicalize(r);
      int idx = sys.root_index(r);
      if (idx < 0) throw std::logic_error("reflection set not closed under conjugation");
      sys.conj_[size_t(s) * n + u] = idx;
      sys.commute_[size_t(s) * n + u] = (s != u && dot(sys.roots_[s], sys.roots_[u]) == 0) ? 1 : 0;
    }
  }
  return sys;
}

int CoxeterSystem::root_index(const std::vector<int>& canonical_root) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), canonical_root);
  if (it == roots_.end() || *it != canonical_root) return -1;
  return int(it - roots_.begin());
}

Counts CoxeterSystem::counts() const {
  if (spec.family == Family::I2) throw UnsupportedType("counts undefined for I2 systems");
  const int n = num_reflections();
  Counts ref;
  for (int s = 0; s < n; ++s) {
    Counts c;
    c.reflections = n;
    for (int u = 0; u < n; ++u) {
      if (u == s) continue;
      (commute(s, u) ? c.commuting : c.noncommuting) += 1;
    }
    if (s == 0)
      ref = c;
    else if (c.commuting != ref.commuting || c.noncommuting != ref.noncommuting)
      throw std::logic_error("commuting counts depend on the reflection");
  }
  return ref;
}

std::vector<FlatDescriptor> CoxeterSystem::codim2_flats() const {
  if (spec.family == Family::I2) throw UnsupportedType("flats undefined for I2 systems");
  const int n = num_reflections();
  std::vector<FlatDescriptor> flats;
  std::set<std::vector<int>> triples;
  long pair_count = 0;
  for (int s = 0; s < n; ++s)
    for (int u = s + 1; u < n; ++u) {
      if (commute(s, u)) {
        flats.push_back({2, {s, u}});
        ++pair_count;
        continue;
      }
      int t = conjugate(s, u);
      if (t != conjugate(u, s)) throw std::logic_error("order-3 flat closure mismatch");
      std::vector<int> mem = {s, u, t};
      std::sort(mem.begin(), mem.end());
      triples.insert(mem);
    }
  for (const auto& mem : triples) {
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = i + 1; j < mem.size(); ++j)
        if (commute(mem[i], mem[j])) throw std::logic_error("commuting pair inside an order-3 flat");
    flats.push_back({3, mem});
  }
  long covered = pair_count + 3 * long(triples.size());
  if (covered != long(n) * (n - 1) / 2) throw std::logic_error("flats do not partition the reflection pairs");
  return flats;
}

bool CoxeterSystem::simples_adjacent(int a, int b) const {
  return a != b && !commute(simples_[a], simples_[b]);
}

std::vector<std::pair<int, int>> CoxeterSystem::adjacent_simple_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < rank(); ++a)
    for (int b = a + 1; b < rank(); ++b)
      if (simples_adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> CoxeterSystem::commuting_simple_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < rank(); ++a)
    for (int b = a + 1; b < rank(); ++b)
      if (!simples_adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

int CoxeterSystem::transposition_index(int i, int j) const {
  if (spec.family != Family::A) throw UnsupportedType("transposition_index requires type A");
  int n = rank() + 1;
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("bad transposition indices");
  if (i > j) std::swap(i, j);
  std::vector<int> r(n, 0);
  r[i - 1] = 1;
  r[j - 1] = -1;
  int idx = root_index(r);
  if (idx < 0) throw std::logic_error("transposition root missing");
  return idx;
}

int CoxeterSystem::d_reflection_index(int i, int j, bool primed) const {
  if (spec.family != Family::D) throw UnsupportedType("d_reflection_index requires type D");
  int n = rank();
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("bad reflection indices");
  if (i > j) std::swap(i, j);
  std::vector<int> r(n, 0);
  r[i - 1] = 1;
  r[j - 1] = primed ? 1 : -1;
  int idx = root_index(r);
  if (idx < 0) throw std::logic_error("type D root missing");
  return idx;
}

std::vector<int> diagram_automorphism_e6(const CoxeterSystem& sys) {
  if (!(sys.spec.family == Family::E && sys.spec.rank == 6))
    throw UnsupportedType("diagram automorphism requires E6");
  static const int node_image[6] = {5, 1, 4, 3, 2, 0};  // 1<->6, 3<->5, fix 2 and 4

  const auto& simples = sys.simple_roots();
  RatMatrix basis(8, 6);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 8; ++i) basis.at(i, j) = simples[j][i];

  const int n = sys.num_reflections();
  std::vector<int> perm(n, -1);
  for (int r = 0; r < n; ++r) {
    RatMatrix rhs(8, 1);
    for (int i = 0; i < 8; ++i) rhs.at(i, 0) = sys.roots()[r][i];
    auto coeffs = basis.solve(rhs);
    if (!coeffs) throw std::logic_error("root outside the simple-root span");
    std::vector<int> image(8, 0);
    for (int k = 0; k < 6; ++k) {
      const Rat& c = coeffs->at(k, 0);
      if (!is_integer(c)) throw std::logic_error("non-integral simple-root expansion");
      long ck = c.get_num().get_si();
      for (int i = 0; i < 8; ++i) image[i] += int(ck) * simples[node_image[k]][i];
    }
    canonicalize(image);
    perm[r] = sys.root_index(image);
    if (perm[r] < 0) throw std::logic_error("diagram automorphism does not permute the roots");
  }
  for (int r = 0; r < n; ++r)
    if (perm[perm[r]] != r) throw std::logic_error("diagram automorphism is not an involution");
  for (int s = 0; s < n; ++s)
    for (int u = 0; u < n; ++u) {
      if (sys.commute(s, u) != sys.commute(perm[s], perm[u]))
        throw std::logic_error("diagram automorphism breaks commutation");
      if (perm[sys.conjugate(s, u)] != sys.conjugate(perm[s], perm[u]))
        throw std::logic_error("diagram automorphism breaks conjugation");
    }
  return perm;
}

FoldingMap folding_table(const std::string& source) {
  FoldingMap f;
  f.source = source;
  if (source == "H3") {
    f.source_rank = 3;
    f.target = TypeSpec{Family::D, 6, 0};
    f.node_images = {{4, 1}, {5, 3}, {6, 2}};
  } else if (source == "F4") {
    f.source_rank = 4;
    f.target = TypeSpec{Family::E, 6, 0};
    f.node_images = {{2}, {4}, {3, 5}, {1, 6}};
  } else if (source == "H4") {
    f.source_rank = 4;
    f.target = TypeSpec{Family::E, 8, 0};
    f.node_images = {{2, 5}, {4, 6}, {3, 7}, {1, 8}};
  } else {
    throw UnsupportedType("unknown folding source: " + source);
  }
  return f;
}

} // namespace krammer
