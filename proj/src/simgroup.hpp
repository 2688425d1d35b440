#pragma once

#include <vector>

#include "quadform.hpp"
#include "rng.hpp"

namespace comptri {

// An element of GO(n) with its multiplier and properness sign cached.
class Similarity {
 public:
  // Computes mu and the sign (det f = sign * mu^4); throws
  // NotASimilarity otherwise.
  static Similarity from_matrix(const QuadraticForm& q, Matrix8 m);

  const Matrix8& mat() const { return mat_; }
  const Scalar& mu() const { return mu_; }
  int sign() const { return sign_; }

  Similarity compose(const Similarity& o) const {
    return Similarity(mat_ * o.mat_, mu_ * o.mu_, sign_ * o.sign_);
  }
  Similarity inverse() const;
  Similarity scaled(const Scalar& lambda) const {
    return Similarity(mat_ * lambda, mu_ * lambda * lambda, sign_);
  }

 private:
  Similarity(Matrix8 m, Scalar mu, int sign)
      : mat_(std::move(m)), mu_(std::move(mu)), sign_(sign) {}

  Matrix8 mat_;
  Scalar mu_;
  int sign_;
};

// A coset f k* in PGO(n), held by its canonical representative: over
// F_p the first nonzero entry in row-major order is 1; over Q the
// entries are cleared to coprime integers with positive first nonzero
// entry.  Coset equality is then bit equality.  The sign descends to
// the coset (mu scales by lambda^2, det by lambda^8).
class ProjSimilarity {
 public:
  static ProjSimilarity of(const Similarity& s);

  const Matrix8& rep() const { return rep_; }
  int sign() const { return sign_; }
  bool is_identity() const;

  bool operator==(const ProjSimilarity& o) const {
    return sign_ == o.sign_ && rep_ == o.rep_;
  }
  bool operator!=(const ProjSimilarity& o) const { return !(*this == o); }

  ProjSimilarity compose(const ProjSimilarity& o) const;
  ProjSimilarity inverse() const;

 private:
  ProjSimilarity(Matrix8 rep, int sign) : rep_(std::move(rep)), sign_(sign) {}
  static Matrix8 canonicalize(const Matrix8& m);

  Matrix8 rep_;
  int sign_;
};

// Reflection in the hyperplane orthogonal to u (anisotropic):
// x - (b_n(x,u)/n(u)) u.  An improper isometry of order two.
Similarity reflect(const QuadraticForm& q, const Vector8& u);

// Cartan-Dieudonne factorization: at most 8 anisotropic vectors whose
// reflections compose (left to right) to the given isometry, exactly.
// Candidates u = h(x) - x with n(u) != 0 drop the rank of h - Id by
// one; when im(h - Id) is totally isotropic a detour reflection is
// inserted first.
std::vector<Vector8> cartan_dieudonne(const QuadraticForm& q,
                                      const Similarity& h);

// Product of k seeded random reflections; sign (-1)^k.
Similarity random_reflection_product(const QuadraticForm& q, int k, Rng& rng);

inline Similarity random_proper_isometry(const QuadraticForm& q, int k,
                                         Rng& rng) {
  return random_reflection_product(q, k % 2 == 0 ? k : k + 1, rng);
}

Vector8 random_anisotropic(const QuadraticForm& q, Rng& rng);

}  // namespace comptri
