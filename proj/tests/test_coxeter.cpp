#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "krammer/coxeter.hpp"
#include "krammer/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace krammer;

namespace {

long expected_reflections(const TypeSpec& t) {
  switch (t.family) {
    case Family::A: return long(t.rank) * (t.rank + 1) / 2;          // n(n-1)/2, n = rank+1
    case Family::D: return long(t.rank) * (t.rank - 1);
    case Family::E: return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
    default: return 0;
  }
}

long expected_commuting(const TypeSpec& t) {
  switch (t.family) {
    case Family::A: {
      long n = t.rank + 1;
      return (n - 2) * (n - 3) / 2;
    }
    case Family::D: {
      long n = t.rank;
      return n * n - 5 * n + 7;
    }
    case Family::E: return t.rank == 6 ? 15 : t.rank == 7 ? 30 : 63;
    default: return 0;
  }
}

} // namespace

TEST_CASE("type parsing") {
  CHECK(TypeSpec::parse("A4") == TypeSpec{Family::A, 4, 0});
  CHECK(TypeSpec::parse("D6") == TypeSpec{Family::D, 6, 0});
  CHECK(TypeSpec::parse("E8") == TypeSpec{Family::E, 8, 0});
  CHECK(TypeSpec::parse("I2(5)") == TypeSpec{Family::I2, 2, 5});
  CHECK(TypeSpec::parse("A12").rank == 12);
  CHECK(TypeSpec::parse("E7").to_string() == "E7");
  CHECK(TypeSpec::parse("I2(12)").to_string() == "I2(12)");

  CHECK_THROWS_AS(TypeSpec::parse("A0"), UnsupportedType);
  CHECK_THROWS_AS(TypeSpec::parse("D3"), UnsupportedType);
  CHECK_THROWS_AS(TypeSpec::parse("E5"), UnsupportedType);
  CHECK_THROWS_AS(TypeSpec::parse("E9"), UnsupportedType);
  CHECK_THROWS_AS(TypeSpec::parse("I2(1)"), UnsupportedType);
  CHECK_THROWS_AS(TypeSpec::parse("B3"), UnsupportedType);
  CHECK_THROWS_AS(TypeSpec::parse("A4x"), UnsupportedType);
  CHECK_THROWS_AS(TypeSpec::parse(""), UnsupportedType);
}

TEST_CASE("reflection counts match the closed forms") {
  std::vector<std::string> types;
  for (int r = 1; r <= 8; ++r) types.push_back("A" + std::to_string(r));
  for (int r = 4; r <= 8; ++r) types.push_back("D" + std::to_string(r));
  for (int r = 6; r <= 8; ++r) types.push_back("E" + std::to_string(r));
  for (const auto& ts : types) {
    CAPTURE(ts);
    TypeSpec t = TypeSpec::parse(ts);
    CoxeterSystem sys = build_system(t);
    Counts c = sys.counts();
    CHECK(c.reflections == expected_reflections(t));
    CHECK(c.commuting == expected_commuting(t));
    CHECK(c.noncommuting == c.reflections - 1 - c.commuting);
    CHECK(c.noncommuting % 2 == 0);
    CHECK(int(sys.simple_indices().size()) == t.rank);
  }
}

TEST_CASE("A2 and A3 reflection tables against hand multiplication") {
  CoxeterSystem a3 = build_system(TypeSpec::parse("A3"));
  int t12 = a3.transposition_index(1, 2);
  int t13 = a3.transposition_index(1, 3);
  int t23 = a3.transposition_index(2, 3);
  int t14 = a3.transposition_index(1, 4);
  int t34 = a3.transposition_index(3, 4);
  // (12)(23)(12) = (13)
  CHECK(a3.conjugate(t12, t23) == t13);
  CHECK(a3.conjugate(t23, t12) == t13);
  // disjoint supports commute
  CHECK(a3.commute(t12, t34));
  CHECK(!a3.commute(t12, t23));
  CHECK(!a3.commute(t12, t12));
  // (14)(23) commute
  CHECK(a3.commute(t14, t23));
  // conjugation by something commuting fixes
  CHECK(a3.conjugate(t34, t12) == t12);
  CHECK(a3.transposition_index(2, 1) == t12);
}

TEST_CASE("reflection order is lexicographic on canonical roots") {
  for (const char* ts : {"A3", "D4", "E6"}) {
    CoxeterSystem sys = build_system(TypeSpec::parse(ts));
    const auto& roots = sys.roots();
    for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i] < roots[i + 1]);
    for (const auto& r : roots) {
      auto nz = std::find_if(r.begin(), r.end(), [](int v) { return v != 0; });
      REQUIRE(nz != r.end());
      CHECK(*nz > 0);
    }
  }
}

TEST_CASE("D systems expose both reflection families") {
  CoxeterSystem d4 = build_system(TypeSpec::parse("D4"));
  int s12 = d4.d_reflection_index(1, 2, false);
  int p12 = d4.d_reflection_index(1, 2, true);
  int s23 = d4.d_reflection_index(2, 3, false);
  int p13 = d4.d_reflection_index(1, 3, true);
  int p23 = d4.d_reflection_index(2, 3, true);
  CHECK(s12 != p12);
  // (12) and (12)' commute
  CHECK(d4.commute(s12, p12));
  // (12)'(23)(12)' = (13)'
  CHECK(d4.conjugate(p12, s23) == p13);
  // (12)(23)'(12) = (13)'
  CHECK(d4.conjugate(s12, p23) == p13);
  CHECK(d4.d_reflection_index(2, 1, true) == p12);
}

TEST_CASE("E8 root inventory") {
  CoxeterSystem e8 = build_system(TypeSpec::parse("E8"));
  CHECK(e8.num_reflections() == 120);
  int pm2 = 0, pm1 = 0;
  for (const auto& r : e8.roots()) {
    std::multiset<int> mags;
    for (int v : r) mags.insert(std::abs(v));
    if (mags == std::multiset<int>{0, 0, 0, 0, 0, 0, 2, 2})
      ++pm2;
    else if (mags == std::multiset<int>{1, 1, 1, 1, 1, 1, 1, 1})
      ++pm1;
  }
  CHECK(pm2 == 56);
  CHECK(pm1 == 64);
  // half-lattice roots have an even number of minus signs
  for (const auto& r : e8.roots()) {
    int minus = 0;
    bool half = true;
    for (int v : r) {
      if (std::abs(v) != 1) half = false;
      if (v < 0) ++minus;
    }
    if (half) CHECK(minus % 2 == 0);
  }
}

TEST_CASE("diagram adjacency matches the printed diagrams") {
  auto edges = [](const CoxeterSystem& sys) {
    std::set<std::pair<int, int>> e;
    for (auto [a, b] : sys.adjacent_simple_pairs()) e.insert({a + 1, b + 1});  // 1-based nodes
    return e;
  };
  CoxeterSystem a4 = build_system(TypeSpec::parse("A4"));
  CHECK(edges(a4) == std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});

  CoxeterSystem d6 = build_system(TypeSpec::parse("D6"));
  CHECK(edges(d6) == std::set<std::pair<int, int>>{{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});

  CoxeterSystem e6 = build_system(TypeSpec::parse("E6"));
  CHECK(edges(e6) == std::set<std::pair<int, int>>{{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}});

  CoxeterSystem e8 = build_system(TypeSpec::parse("E8"));
  CHECK(edges(e8) ==
        std::set<std::pair<int, int>>{{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});

  CHECK(a4.commuting_simple_pairs().size() == 3);
  CHECK(d6.adjacent_simple_pairs().size() + d6.commuting_simple_pairs().size() == 15);
}

TEST_CASE("codimension-2 flats partition the pairs") {
  for (const char* ts : {"A3", "A4", "D4", "D5", "E6"}) {
    CAPTURE(ts);
    CoxeterSystem sys = build_system(TypeSpec::parse(ts));
    Counts c = sys.counts();
    auto flats = sys.codim2_flats();
    long order2 = 0, order3 = 0;
    for (const auto& f : flats) {
      REQUIRE((f.order == 2 || f.order == 3));
      CHECK(int(f.members.size()) == f.order);
      if (f.order == 2) {
        CHECK(sys.commute(f.members[0], f.members[1]));
        ++order2;
      } else {
        // closed under mutual conjugation
        CHECK(sys.conjugate(f.members[0], f.members[1]) == f.members[2]);
        ++order3;
      }
    }
    CHECK(order2 == c.reflections * c.commuting / 2);
    CHECK(order3 == c.reflections * c.noncommuting / 6);
  }
  // A3 has exactly 4 order-3 flats, one per 3-element subset of {1,2,3,4}
  CoxeterSystem a3 = build_system(TypeSpec::parse("A3"));
  auto flats = a3.codim2_flats();
  CHECK(std::count_if(flats.begin(), flats.end(), [](const FlatDescriptor& f) { return f.order == 3; }) == 4);
  CHECK(std::count_if(flats.begin(), flats.end(), [](const FlatDescriptor& f) { return f.order == 2; }) == 3);
}

TEST_CASE("E6 diagram automorphism") {
  CoxeterSystem e6 = build_system(TypeSpec::parse("E6"));
  auto perm = diagram_automorphism_e6(e6);
  REQUIRE(perm.size() == 36);

  // acts on the simple reflections exactly as the node swap 1<->6, 3<->5
  const auto& s = e6.simple_indices();
  CHECK(perm[s[0]] == s[5]);
  CHECK(perm[s[5]] == s[0]);
  CHECK(perm[s[2]] == s[4]);
  CHECK(perm[s[4]] == s[2]);
  CHECK(perm[s[1]] == s[1]);
  CHECK(perm[s[3]] == s[3]);

  int fixed = 0;
  for (int r = 0; r < 36; ++r)
    if (perm[r] == r) ++fixed;
  CHECK(fixed == 12);

  CHECK_THROWS_AS(diagram_automorphism_e6(build_system(TypeSpec::parse("E7"))), UnsupportedType);
}

TEST_CASE("folding tables target commuting node pairs") {
  for (const char* src : {"H3", "F4", "H4"}) {
    CAPTURE(src);
    FoldingMap f = folding_table(src);
    CoxeterSystem target = build_system(f.target);
    CHECK(int(f.node_images.size()) == f.source_rank);
    std::set<int> used;
    for (const auto& img : f.node_images) {
      for (int node : img) {
        CHECK(node >= 1);
        CHECK(node <= target.rank());
        CHECK(used.insert(node).second);  // nodes used at most once overall
      }
      if (img.size() == 2) CHECK(!target.simples_adjacent(img[0] - 1, img[1] - 1));
    }
  }
  CHECK(folding_table("H3").target.to_string() == "D6");
  CHECK(folding_table("F4").target.to_string() == "E6");
  CHECK(folding_table("H4").target.to_string() == "E8");
  CHECK_THROWS_AS(folding_table("G2"), UnsupportedType);
}

TEST_CASE("I2 systems carry generators only") {
  CoxeterSystem i2 = build_system(TypeSpec::parse("I2(7)"));
  CHECK(i2.num_reflections() == 0);
  CHECK(i2.spec.i2_order == 7);
  CHECK_THROWS_AS(i2.counts(), UnsupportedType);
  CHECK_THROWS_AS(i2.codim2_flats(), UnsupportedType);
}
