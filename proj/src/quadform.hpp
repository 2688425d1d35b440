#pragma once

#include <array>
#include <optional>
#include <span>

#include "linalg.hpp"

namespace comptri {

// A non-degenerate quadratic form n on k^8, held as its Gram matrix M
// with n(x) = x^T M x, and the polar form b_n(x,y) = n(x+y)-n(x)-n(y)
// cached as B = 2M.
class QuadraticForm {
 public:
  // <<a,b,c>> = <1,-a> (x) <1,-b> (x) <1,-c>, i.e. the diagonal form
  // <1,-a,-b,ab,-c,ac,bc,-abc>.  This convention makes the norm of the
  // Cayley-Dickson algebra with parameters (a,b,c) come out on the nose.
  static QuadraticForm pfister3(const Scalar& a, const Scalar& b,
                                const Scalar& c);
  static QuadraticForm from_gram(const Matrix8& m);

  const Matrix8& gram() const { return gram_; }
  const Matrix8& bilinear() const { return bil_; }
  Field field() const { return gram_.field(); }
  const std::optional<std::array<Scalar, 3>>& pfister_params() const {
    return pfister_;
  }

  Scalar eval(const Vector8& x) const;                     // n(x)
  Scalar eval(const Vector8& x, const Vector8& y) const;   // b_n(x,y)

  bool operator==(const QuadraticForm& o) const { return gram_ == o.gram_; }

 private:
  QuadraticForm(Matrix8 gram, Matrix8 bil)
      : gram_(std::move(gram)), bil_(std::move(bil)) {}

  Matrix8 gram_;
  Matrix8 bil_;
  std::optional<std::array<Scalar, 3>> pfister_;
};

// mu(f) with f^T B f = mu B, or NotASimilarity.
Scalar similarity_multiplier(const QuadraticForm& q, const Matrix8& f);

// +1 iff det f = mu(f)^4, -1 iff det f = -mu(f)^4 (the only two cases in
// dimension 8; anything else is asserted away).  The Clifford-centre
// definition lives in clifford.hpp as an independent cross-check.
int is_proper(const QuadraticForm& q, const Matrix8& f);

// ad(f) = B^{-1} f^T B, so that b_n(f x, y) = b_n(x, ad(f) y).
Matrix8 adjoint(const QuadraticForm& q, const Matrix8& f);

// Deterministic search for a vector of prescribed norm (or any nonzero
// norm when target is null).  Over F_p the sweep is basis vectors, then
// pairs e_i + t e_j over all t, then full enumeration (p = 3 only); a
// non-degenerate binary diagonal block over F_p represents every value,
// so the pair sweep already succeeds for diagonal forms.  Over Q the
// search is budgeted and NotFound does not mean nonexistence.
Vector8 find_norm_vector(const QuadraticForm& q, const Scalar* target,
                         long budget = 200000);

// Same search constrained to span(basis); used when doubling
// subalgebras.  The basis need not be orthogonal.
Vector8 find_norm_vector_in(const QuadraticForm& q,
                            std::span<const Vector8> basis,
                            const Scalar* target, long budget = 200000);

}  // namespace comptri
