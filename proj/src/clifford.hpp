#pragma once

#include <vector>

#include "simgroup.hpp"

namespace comptri {

// The Clifford algebra C(V, n), dimension 256.  Internally everything
// is expressed against an orthogonal basis diagonalizing n, so blades
// multiply by pure sign bookkeeping plus e_i^2 = d_i.  Elements are
// dense coefficient vectors indexed by subset masks.
class CliffordAlgebra {
 public:
  using Elem = std::vector<Scalar>;  // 256 coefficients

  explicit CliffordAlgebra(const QuadraticForm& q);

  const QuadraticForm& form() const { return q_; }
  const std::array<Scalar, 8>& diag() const { return diag_; }

  Elem zero() const;
  Elem one() const;
  Elem blade(uint8_t mask) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem scale(const Elem& x, const Scalar& s) const;

  // Grade-1 element for a vector given in the original coordinates.
  Elem grade1(const Vector8& v) const;

  // Canonical involution (blade reversal): identity on V, sign
  // (-1)^{k(k-1)/2} on grade k.
  Elem reversal(const Elem& x) const;

  // Basis {1, z} of the centre of the even part, found by solving
  // z g = g z against the generators g = e_0 e_j of C_0.  Dimension 2
  // is asserted, anything else is a bug.
  std::vector<Elem> even_centre() const;

  // The lift C_0(f), determined on paired generators by
  // e_i e_j -> mu^{-1} f(e_i) f(e_j), applied to an even element.
  // Never materialized as a matrix; the centre test needs one image.
  Elem lift_even(const Similarity& f, const Elem& x) const;

  // +1 when C_0(f) fixes the non-trivial centre element, -1 when it
  // maps it to its conjugate.
  int properness_via_centre(const Similarity& f) const;

 private:
  QuadraticForm q_;
  Matrix8 p_;      // columns: orthogonal basis in original coordinates
  Matrix8 pinv_;
  std::array<Scalar, 8> diag_;
  Elem centre_z_;  // cached non-trivial centre element
};

}  // namespace comptri
