#pragma once

#include "krammer/coxeter.hpp"
#include "krammer/matrix.hpp"
#include "krammer/modp.hpp"
#include "krammer/polynomial.hpp"

#include <string>
#include <vector>

namespace krammer {

enum class GeneratorSet { all_reflections, simple_reflections, last_column };

std::string generator_set_name(GeneratorSet s);

struct SurjectivityReport {
  TypeSpec type;
  GeneratorSet set = GeneratorSet::simple_reflections;
  Rat m;
  int p = 0;
  long generator_count = 0;
  long dimension = 0;
  long target = 0;  // N^2
  bool saturated = false;
  bool full() const { return saturated && dimension == target; }
};

// The t_s for the selected reflections, reduced mod p, closed under
// brackets. last_column (type A only) selects the reflections moving the
// last strand. Throws UnsupportedType for a selector/type mismatch.
SurjectivityReport check_surjectivity(const CoxeterSystem& sys, GeneratorSet set,
                                      const Rat& m, int p,
                                      const ClosureProgress& progress = {});

// One matrix per source generator of the folding: the sum of t_s over the
// simple reflections of its node image (a commuting set, checked).
std::vector<RatMatrix> folded_generators(const CoxeterSystem& sys, const FoldingMap& fold,
                                         const Rat& m);

// Eigenspace split of V under the order-2 diagram symmetry of E6, with the
// four folded generators restricted to the 24-dimensional +1 block.
// Throws StabilityFailure if a generator fails to preserve an eigenspace.
struct F4Split {
  std::vector<RatVec> plus_basis;          // dimension 24
  std::vector<RatVec> minus_basis;         // dimension 12
  std::vector<RatMatrix> restricted;       // 24 x 24, one per folded generator
};

F4Split f4_split(const CoxeterSystem& sys, const Rat& m);

struct FoldedReport {
  std::string source;  // "F4", "H3", "H4"
  TypeSpec target;
  Rat m;
  int p = 0;
  long dimension = 0;
  long target_dim = 0;
  bool saturated = false;
  bool full() const { return saturated && dimension == target_dim; }
};

// Closure of the folded generator images: F4 on the 24-dimensional block of
// E6, H3 on the 30 reflections of D6, H4 on the 120 of E8.
FoldedReport check_folded_surjectivity(const std::string& source, const Rat& m, int p,
                                       const ClosureProgress& progress = {});

// Exact Lie closure over Q. Quadratic blowup in exact arithmetic; meant for
// small matrices such as the dihedral specializations.
long rational_closure_dimension(const std::vector<RatMatrix>& generators);

// The two dihedral Burau generators with formal parameter c:
//   X = [[0, 0], [-c, 2]],  Y = [[2, -c], [0, 0]]
// Over Q(c) they generate all of gl_2; the generic certificate is the
// determinant of (X, Y, [X,Y], [X,[X,Y]]) as flattened vectors, a polynomial
// in c whose rational roots are the only possible degenerations.
struct DihedralClosureReport {
  long generic_dimension = 0;     // 4
  Poly certificate;               // det in c; nonzero away from its roots
  std::vector<Rat> exceptional;   // rational roots of the certificate
  std::vector<long> exceptional_dimension;  // exact closure dim at each root
};

DihedralClosureReport burau_dihedral_closure();

// Specializes the dihedral parameter to c = 2 cos(2 pi / order). Rational c
// (order 1,2,3,4,6) is handled exactly; otherwise the certificate is shown
// coprime to the minimal polynomial of c, so no conjugate degenerates.
struct DihedralCertificate {
  int order = 0;
  bool c_rational = false;
  Rat c;                 // only meaningful when c_rational
  long dimension = 0;    // closure dimension (certified value)
  bool full() const { return dimension == 4; }
  std::string detail;
};

DihedralCertificate dihedral_certificate(int order);

} // namespace krammer
