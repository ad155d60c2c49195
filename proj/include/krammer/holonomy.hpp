#pragma once

#include "krammer/coxeter.hpp"
#include "krammer/matrix.hpp"
#include "krammer/verify.hpp"

namespace krammer {

// Sum of t_u over the members of a codimension-2 flat.
RatMatrix tau_flat(const CoxeterSystem& sys, const FlatDescriptor& flat, const Rat& m);

// For every codimension-2 flat X: t_X restricted to E_X = span{v_u : u in X}
// is the scalar m+1 (order 2) or m (order 3), and [t_s, t_X] = 0 for every
// s in X.
VerifyResult verify_flat_relations(const CoxeterSystem& sys, const Rat& m);

struct TripleSpectrum {
  int s0 = -1, si = -1, sj = -1;
  // one entry per distinct claimed eigenvalue of {3, -3, 0, m}
  std::vector<std::pair<Rat, long>> multiplicities;
  long multiplicity(const Rat& lambda) const;
};

// Eigenvalue multiplicities of T = t_{s0} + t_{si} + t_{sj} as exact rank
// deficiencies, for adjacent simple diagram nodes (0-based positions) with
// s0 = s_i s_j s_i. Throws SpectrumEscape if {3,-3,0,m} fails to exhaust
// dim V, PoleParameter for m in {0,3}.
TripleSpectrum triple_spectrum(const CoxeterSystem& sys, int node_i, int node_j, const Rat& m);

struct WBasis {
  int s0 = -1, si = -1, sj = -1;
  std::vector<RatVec> vectors;  // indexed by reflection
  long commuting_with_all = 0;  // reflections commuting with the whole triple
  long orbits = 0;              // size-3 conjugation orbits under the triple
  VerifyResult checks;
};

// The corrected eigenvector basis for the triple sum: w_x = v_x on the triple
// and on reflections commuting with all of it; on a size-3 orbit the member u
// commuting with s0 gets v_u + 2/(m(m-3)) v_{s0} + (m-1)/(m(m-3))
// (v_{si} + v_{sj}) and its partners are the permutation images. Verifies
// t_s w_x = w_{s•x} over the orbit/single part and that the w's form a
// basis. PoleParameter for m in {0,3}.
WBasis w_basis(const CoxeterSystem& sys, int node_i, int node_j, const Rat& m);

// p_s p_u = p_u p_s = 0 for distinct commuting reflections s, u.
VerifyResult verify_commuting_product_vanishes(const CoxeterSystem& sys, int s, int u, const Rat& m);

} // namespace krammer
