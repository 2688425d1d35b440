#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "field.hpp"

namespace comptri {

struct Vector8 {
  std::array<Scalar, 8> c;

  static Vector8 zero(const Field& f);
  static Vector8 unit(const Field& f, int i);

  Field field() const { return c[0].field(); }

  Scalar& operator[](int i) { return c[i]; }
  const Scalar& operator[](int i) const { return c[i]; }

  Vector8 operator+(const Vector8& o) const;
  Vector8 operator-(const Vector8& o) const;
  Vector8 operator*(const Scalar& s) const;
  Vector8 operator-() const;
  bool operator==(const Vector8& o) const;
  bool is_zero() const;
};

struct Matrix8 {
  std::array<Scalar, 64> a;

  static Matrix8 zero(const Field& f);
  static Matrix8 identity(const Field& f);

  Field field() const { return a[0].field(); }

  Scalar& at(int i, int j) { return a[i * 8 + j]; }
  const Scalar& at(int i, int j) const { return a[i * 8 + j]; }

  Matrix8 operator+(const Matrix8& o) const;
  Matrix8 operator-(const Matrix8& o) const;
  Matrix8 operator*(const Matrix8& o) const;
  Matrix8 operator*(const Scalar& s) const;
  Matrix8 operator-() const;
  Vector8 apply(const Vector8& v) const;
  Matrix8 transpose() const;
  bool operator==(const Matrix8& o) const;
  bool is_zero() const;

  Vector8 col(int j) const;
  Vector8 row(int i) const;
  static Matrix8 from_cols(const std::array<Vector8, 8>& cols);
};

// Exact Gauss-Jordan elimination with deterministic pivoting (first
// nonzero in column order), so kernels and coset representatives are
// reproducible.  Solves M x = t for each target when M is invertible;
// otherwise reports a kernel basis.  Determinant and inverse fall out
// of the same sweep.
struct SolveResult {
  bool invertible = false;
  int rank = 0;
  Scalar det;
  std::vector<Vector8> solutions;   // one per target, iff invertible
  std::vector<Vector8> kernel;      // basis of null space, iff singular
  std::optional<Matrix8> inverse;   // iff invertible
};

SolveResult mat_solve(const Matrix8& m, std::span<const Vector8> targets);

inline SolveResult mat_solve(const Matrix8& m) {
  return mat_solve(m, std::span<const Vector8>());
}

Scalar det(const Matrix8& m);
std::optional<Matrix8> inverse(const Matrix8& m);

// Dense helpers on arbitrary shapes, used internally by the Clifford
// and triality modules (rows x cols, row-major).
using MatrixG = std::vector<std::vector<Scalar>>;

// Basis of { x : A x = 0 }; deterministic (RREF, free columns in order,
// free coordinate set to 1).
std::vector<std::vector<Scalar>> kernel_basis(const MatrixG& a,
                                              const Field& f);

struct GenSolve {
  bool consistent = false;
  bool unique = false;
  std::vector<Scalar> solution;
};

GenSolve solve_linear(const MatrixG& a, const std::vector<Scalar>& rhs,
                      const Field& f);

}  // namespace comptri
