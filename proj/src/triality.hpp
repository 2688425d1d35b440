#pragma once

#include <utility>

#include "compalg.hpp"
#include "simgroup.hpp"

namespace comptri {

class Session;

// Triality components of a proper similarity h with respect to a
// composition algebra C: the pair (h1, h2) with h(xy) = h1(x) h2(y),
// unique up to a scalar moved between the factors.
struct TrialityPair {
  Similarity h1, h2;
};

// Solves h(x *src y) = h1(x) *dst h2(y) for a unital source product and
// a unital composition target on the same space.  Any solution has
// h1 = R_b^{-1} h for b = h2(e_src), and membership of
// h R_y h^{-1} R_b in span{R_c} for all basis y is linear in b; the
// kernel of that 448 x 8 system must be a line.  NoSolution (dimension
// 0) is raised exactly when no component pair exists; Degenerate
// (dimension >= 2) would contradict uniqueness and is a bug trap.
TrialityPair solve_components(const AlgebraK& src,
                              const CompositionAlgebra& dst,
                              const Similarity& h);

// Components with respect to an arbitrary C with multiplier 1: reduce
// to the unitalization H via C = H_{f,g} and conjugate back by f, g.
// All 64 basis identities and the component invariants are checked
// before returning.  Improper h surfaces as NoSolution, which doubles
// as an independent properness test.
TrialityPair triality_components(const CompositionAlgebra& c,
                                 const Similarity& h);

// rho_r^C on projective classes: [h] -> [h_r], r in {1, 2}.
ProjSimilarity rho(const CompositionAlgebra& c, int r,
                   const ProjSimilarity& h);

// kappa_[coset] (rho_1^{S0})^r, the normal form of an automorphism of
// PGO+(n) anchored to the session para-Hurwitz base S0.  Equality is
// componentwise; that it is well defined rests on rho_1^{S0} being
// strongly outer and on the centralizer of PGO+(n) in PGO(n) being
// trivial (taken as an axiom, see README).
struct MarkedAuto {
  int r;  // mod 3
  ProjSimilarity coset;

  bool operator==(const MarkedAuto& o) const {
    return r == o.r && coset == o.coset;
  }
  bool operator!=(const MarkedAuto& o) const { return !(*this == o); }
};

// Order of the image in Aut/Inn = S3: 1 for the identity class, 2 when
// an improper coset is involved, 3 for a pure nonzero twist.
int s3_order(const MarkedAuto& a);

// (rho_1^C, rho_2^C) in normal form: symmetric-decompose C, align the
// resulting para-Hurwitz base onto S0 when it differs, and fold the
// alignment coset through rho.  Returns the r = 1 and r = 2 markings.
std::pair<MarkedAuto, MarkedAuto> marked_auto_of(const Session& s,
                                                 const CompositionAlgebra& c);

// An isomorphism from one Hurwitz algebra to another with the same
// form, built by matching Cayley-Dickson doubling generators of equal
// norms.  Verified as an algebra isomorphism and isometry on all basis
// products.  Over Q the norm matching is budgeted and surfaces
// AlignmentNotFound; over finite fields the search is effectively
// exhaustive.
Matrix8 hurwitz_align(const CompositionAlgebra& from,
                      const CompositionAlgebra& to, long budget = 200000);

// Swapped components of an improper h with respect to S0:
// h(x y) = h1(y) h2(x).  Factors through the session reference
// reflection, whose swap data is precomputed.
TrialityPair swap_components(const Session& s, const Similarity& h);

// The conjugation action [h] . a = kappa_[h] a kappa_[h]^{-1} in
// normal form.  For proper [h] the twist r survives and the coset maps
// to [h][f] rho^r([h])^{-1}; conjugation by an improper class swaps the
// nonzero twists (r -> -r mod 3), with the coset corrected through the
// swapped components.
MarkedAuto conj_marked(const Session& s, const ProjSimilarity& h,
                       const MarkedAuto& a);

// Evaluate the automorphism denoted by a at a proper class.
ProjSimilarity apply_marked(const Session& s, const MarkedAuto& a,
                            const ProjSimilarity& x);

// rho_r^{S0}.
ProjSimilarity rho_base(const Session& s, int r, const ProjSimilarity& h);

}  // namespace comptri
