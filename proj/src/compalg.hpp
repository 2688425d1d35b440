#pragma once

#include <memory>
#include <optional>

#include "quadform.hpp"

namespace comptri {

// An algebra structure on k^8: structure constants against the ambient
// quadratic form.  gamma(i,j) is the product e_i e_j as a vector.  No
// unit or composition property is assumed at this level.
struct AlgebraK {
  std::shared_ptr<const QuadraticForm> form;
  std::array<Vector8, 64> gamma;

  Field field() const { return form->field(); }
  const Vector8& basis_product(int i, int j) const { return gamma[i * 8 + j]; }
  Vector8& basis_product(int i, int j) { return gamma[i * 8 + j]; }

  Vector8 mul(const Vector8& x, const Vector8& y) const;
  Matrix8 lmul(const Vector8& c) const;  // L_c
  Matrix8 rmul(const Vector8& c) const;  // R_c

  bool operator==(const AlgebraK& o) const;
};

// Determines lambda with n(xy) = lambda n(x) n(y), by evaluating the
// polarized grid {e_i} u {e_i + e_j, i < j} against itself (36 x 36).
// A biquadratic form over a field of characteristic != 2 vanishes
// identically iff it vanishes on that grid, so this is a proof, not a
// sample.  Throws NotComposition on any inconsistency and
// NoAnisotropicPair when lambda cannot be read off.
Scalar check_composition(const AlgebraK& a);

// Structure-constant algebra certified multiplicative.  lambda == 1 is
// a composition algebra proper; lambda != 1 a generalized one.
class CompositionAlgebra {
 public:
  static CompositionAlgebra certify(AlgebraK a);

  const AlgebraK& alg() const { return alg_; }
  const QuadraticForm& form() const { return *alg_.form; }
  Field field() const { return alg_.field(); }
  const Scalar& multiplier() const { return multiplier_; }
  const std::optional<Vector8>& unit() const { return unit_; }

  Vector8 mul(const Vector8& x, const Vector8& y) const {
    return alg_.mul(x, y);
  }
  Matrix8 lmul(const Vector8& c) const { return alg_.lmul(c); }
  Matrix8 rmul(const Vector8& c) const { return alg_.rmul(c); }

  bool operator==(const CompositionAlgebra& o) const {
    return alg_ == o.alg_;
  }

 private:
  CompositionAlgebra(AlgebraK a, Scalar m, std::optional<Vector8> u)
      : alg_(std::move(a)), multiplier_(std::move(m)), unit_(std::move(u)) {}

  AlgebraK alg_;
  Scalar multiplier_;
  std::optional<Vector8> unit_;
};

// Three doublings of k with parameters a, b, c under the convention
// (x,y)(u,v) = (xu + d conj(v) y, v x + y conj(u)); the norm is exactly
// QuadraticForm::pfister3(a,b,c) and the unit is e_1.
CompositionAlgebra cayley_dickson(const Scalar& a, const Scalar& b,
                                  const Scalar& c);

// Split octonions via Zorn vector matrices, re-expressed in a basis
// whose Gram matrix equals pfister3(1,1,1).  Only valid on that form.
CompositionAlgebra zorn_split(const Field& f);

// x . y = f(x) g(y) on the same space and form.
AlgebraK isotope(const AlgebraK& a, const Matrix8& f, const Matrix8& g);

// lambda A, i.e. the isotope by (lambda Id, Id).
AlgebraK scalar_multiple(const AlgebraK& a, const Scalar& lambda);

// The unique two-sided unit, if any (linear solve L_e = R_e = Id).
std::optional<Vector8> unit_element(const AlgebraK& a);

// Kaplansky's trick: pick anisotropic v, set e = n(v)^{-1} v^2; then
// H = C_{R_e^{-1}, L_e^{-1}} is a Hurwitz algebra with unit e.e and
// C = H_{f,g} with f = R_e^C, g = L_e^C in O(n).
struct Unitalization {
  CompositionAlgebra hurwitz;
  Matrix8 f, g;
  Vector8 e;  // the unit of H
};
Unitalization unitalize(const CompositionAlgebra& c);

// x -> b_n(x,e) e - x; requires a unit of norm 1.
Matrix8 canonical_involution(const CompositionAlgebra& h);

// H_{i,i} for the canonical involution i.
CompositionAlgebra para_hurwitz(const CompositionAlgebra& h);

// C = S_{f,g} with S symmetric (the para-Hurwitz algebra of the
// unitalization, which is kept for base alignment) and f, g in O(n).
struct SymmetricDecomposition {
  CompositionAlgebra sym;
  Matrix8 f, g;
  CompositionAlgebra hurwitz;
  Vector8 e;
};
SymmetricDecomposition symmetric_decomposition(const CompositionAlgebra& c);

// b_n(xy, z) = b_n(x, yz) on all basis triples (trilinear, so the 512
// basis cases decide it).
bool is_symmetric(const AlgebraK& a);

// Given an isomorphism h: A -> B (verified on basis products), returns
// B_{h f h^{-1}, h g h^{-1}}, to which h is again an isomorphism from
// A_{f,g}.
AlgebraK transport_isotope(const Matrix8& h, const AlgebraK& a,
                           const Matrix8& f, const Matrix8& g,
                           const AlgebraK& b);

// From F, G in GO(n) and a unital H, produces a symmetric composition
// algebra T and f, g in O(n) realizing the same pair of twisted
// triality automorphisms.  Route: H' = H_{R_a, L_b} with a = F^{-1}(e),
// b = G^{-1}(e) is unital generalized composition with unit (ab)^{-1}
// and multiplier n(ab); its conjugation i' gives the symmetric
// generalized S' = H'_{i',i'}; when n(ab) is a square mu^2, T =
// mu^{-1} S' is an honest symmetric composition algebra.  Throws
// NotSquare otherwise.
struct NormalizationChain {
  CompositionAlgebra sym;       // T, multiplier 1
  Matrix8 f, g;                 // isometries
  CompositionAlgebra hprime;    // H', unital generalized
  Matrix8 iprime;               // conjugation of H'
  CompositionAlgebra sprime;    // S', symmetric generalized
  Scalar lambda;                // n(ab)
  Scalar mu;                    // sqrt(lambda)
  Vector8 eprime;               // (ab)^{-1}
  Vector8 a, b;
};
NormalizationChain normalization_chain(const CompositionAlgebra& h,
                                       const Matrix8& F, const Matrix8& G);

}  // namespace comptri
