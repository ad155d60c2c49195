#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace krammer {

enum class Family { A, D, E, I2 };

struct TypeSpec {
  Family family = Family::A;
  int rank = 1;
  int i2_order = 0;  // dihedral parameter, only for I2 systems

  // "A4", "D6", "E8", "I2(5)"
  std::string to_string() const;
  static TypeSpec parse(const std::string& s);
  bool operator==(const TypeSpec&) const = default;
};

struct Counts {
  long reflections = 0;  // #R
  long commuting = 0;    // c: reflections commuting with a fixed s (s excluded)
  long noncommuting = 0; // c': the rest, #R - 1 - c
};

// A codimension-2 intersection: either a commuting pair (dihedral order 2)
// or a conjugation-closed triple (dihedral order 3).
struct FlatDescriptor {
  int order = 2;             // 2 or 3
  std::vector<int> members;  // reflection indices, sorted
};

// Reflections are indexed by canonical root vectors (sign-normalized so the
// first nonzero coordinate is positive) in lexicographic order.
class CoxeterSystem {
public:
  TypeSpec spec;

  int num_reflections() const { return int(roots_.size()); }
  int rank() const { return spec.rank; }
  const std::vector<std::vector<int>>& roots() const { return roots_; }
  // Indices of the simple reflections, diagram node order (size = rank).
  const std::vector<int>& simple_indices() const { return simples_; }
  // The signed simple root vectors themselves (canonicalization may flip the
  // stored representative, so linear constructions need these).
  const std::vector<std::vector<int>>& simple_roots() const { return simple_roots_; }

  bool commute(int s, int u) const { return commute_[size_t(s) * roots_.size() + u] != 0; }
  // Index of s•u = s u s^{-1}.
  int conjugate(int s, int u) const { return conj_[size_t(s) * roots_.size() + u]; }

  // #R, c, c' checked constant across every choice of s.
  Counts counts() const;

  std::vector<FlatDescriptor> codim2_flats() const;

  // Diagram adjacency between simple nodes a, b (0-based node positions).
  bool simples_adjacent(int a, int b) const;
  std::vector<std::pair<int, int>> adjacent_simple_pairs() const;
  std::vector<std::pair<int, int>> commuting_simple_pairs() const;

  // Type A: index of the transposition (i j), 1-based, i != j, both <= rank+1.
  int transposition_index(int i, int j) const;
  // Type D: (i j) for primed=false (root e_i - e_j), (i j)' for primed=true
  // (root e_i + e_j); 1-based, i != j, both <= rank.
  int d_reflection_index(int i, int j, bool primed) const;

  int root_index(const std::vector<int>& canonical_root) const;  // -1 if absent

private:
  friend CoxeterSystem build_system(const TypeSpec&);
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<int>> simple_roots_;
  std::vector<int> simples_;
  std::vector<int> conj_;
  std::vector<uint8_t> commute_;
};

// Enumerates the reflection set and closes the tables. A: rank >= 1.
// D: rank >= 4. E: rank in {6,7,8}. I2(k): k >= 2, carries only the
// generator count and the parameter (no root enumeration).
CoxeterSystem build_system(const TypeSpec& spec);

// The order-2 diagram symmetry of E6 (nodes 1<->6, 3<->5) extended linearly
// to the whole reflection set. Returns the induced permutation of reflection
// indices; checks it is an involution compatible with commutation and
// conjugation.
std::vector<int> diagram_automorphism_e6(const CoxeterSystem& sys);

struct FoldingMap {
  std::string source;    // "H3", "F4", "H4"
  int source_rank = 0;
  TypeSpec target;
  // Image of each source generator as a set of target diagram nodes (1-based).
  std::vector<std::vector<int>> node_images;
};

// H3 -> D6, F4 -> E6, H4 -> E8 generator images.
FoldingMap folding_table(const std::string& source);

} // namespace krammer
