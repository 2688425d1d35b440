#include "linalg.hpp"

#include <cassert>

namespace comptri {

Vector8 Vector8::zero(const Field& f) {
  Vector8 v;
  v.c.fill(Scalar::zero(f));
  return v;
}

Vector8 Vector8::unit(const Field& f, int i) {
  Vector8 v = zero(f);
  v.c[i] = Scalar::one(f);
  return v;
}

Vector8 Vector8::operator+(const Vector8& o) const {
  Vector8 r;
  for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

Vector8 Vector8::operator-(const Vector8& o) const {
  Vector8 r;
  for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

Vector8 Vector8::operator*(const Scalar& s) const {
  Vector8 r;
  for (int i = 0; i < 8; ++i) r.c[i] = c[i] * s;
  return r;
}

Vector8 Vector8::operator-() const {
  Vector8 r;
  for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
  return r;
}

bool Vector8::operator==(const Vector8& o) const {
  for (int i = 0; i < 8; ++i)
    if (c[i] != o.c[i]) return false;
  return true;
}

bool Vector8::is_zero() const {
  for (int i = 0; i < 8; ++i)
    if (!c[i].is_zero()) return false;
  return true;
}

Matrix8 Matrix8::zero(const Field& f) {
  Matrix8 m;
  m.a.fill(Scalar::zero(f));
  return m;
}

Matrix8 Matrix8::identity(const Field& f) {
  Matrix8 m = zero(f);
  for (int i = 0; i < 8; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix8 Matrix8::operator+(const Matrix8& o) const {
  Matrix8 r;
  for (int i = 0; i < 64; ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

Matrix8 Matrix8::operator-(const Matrix8& o) const {
  Matrix8 r;
  for (int i = 0; i < 64; ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

Matrix8 Matrix8::operator*(const Matrix8& o) const {
  Matrix8 r = zero(field());
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < 8; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Matrix8 Matrix8::operator*(const Scalar& s) const {
  Matrix8 r;
  for (int i = 0; i < 64; ++i) r.a[i] = a[i] * s;
  return r;
}

Matrix8 Matrix8::operator-() const {
  Matrix8 r;
  for (int i = 0; i < 64; ++i) r.a[i] = -a[i];
  return r;
}

Vector8 Matrix8::apply(const Vector8& v) const {
  Vector8 r = Vector8::zero(field());
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (at(i, j).is_zero() || v.c[j].is_zero()) continue;
      r.c[i] += at(i, j) * v.c[j];
    }
  return r;
}

Matrix8 Matrix8::transpose() const {
  Matrix8 r;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix8::operator==(const Matrix8& o) const {
  for (int i = 0; i < 64; ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

bool Matrix8::is_zero() const {
  for (int i = 0; i < 64; ++i)
    if (!a[i].is_zero()) return false;
  return true;
}

Vector8 Matrix8::col(int j) const {
  Vector8 v;
  for (int i = 0; i < 8; ++i) v.c[i] = at(i, j);
  return v;
}

Vector8 Matrix8::row(int i) const {
  Vector8 v;
  for (int j = 0; j < 8; ++j) v.c[j] = at(i, j);
  return v;
}

Matrix8 Matrix8::from_cols(const std::array<Vector8, 8>& cols) {
  Matrix8 m;
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) m.at(i, j) = cols[j].c[i];
  return m;
}

SolveResult mat_solve(const Matrix8& m, std::span<const Vector8> targets) {
  const Field f = m.field();
  const int nt = static_cast<int>(targets.size());
  const int cols = 8 + nt + 8;  // M | targets | I

  // Working rows of the augmented system.
  std::vector<std::vector<Scalar>> w(8, std::vector<Scalar>(cols, Scalar::zero(f)));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) w[i][j] = m.at(i, j);
    for (int t = 0; t < nt; ++t) w[i][8 + t] = targets[t].c[i];
    w[i][8 + nt + i] = Scalar::one(f);
  }

  SolveResult res;
  res.det = Scalar::one(f);
  std::array<int, 8> pivot_col{};
  pivot_col.fill(-1);
  int row = 0;
  for (int col = 0; col < 8 && row < 8; ++col) {
    int pr = -1;
    for (int r = row; r < 8; ++r)
      if (!w[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row) {
      std::swap(w[pr], w[row]);
      res.det = -res.det;
    }
    Scalar inv = w[row][col].inv();
    res.det = res.det * w[row][col];
    for (int j = col; j < cols; ++j) w[row][j] = w[row][j] * inv;
    for (int r = 0; r < 8; ++r) {
      if (r == row || w[r][col].is_zero()) continue;
      Scalar factor = w[r][col];
      for (int j = col; j < cols; ++j) w[r][j] -= factor * w[row][j];
    }
    pivot_col[row] = col;
    ++row;
  }
  res.rank = row;
  res.invertible = (row == 8);
  if (!res.invertible) res.det = Scalar::zero(f);

  if (res.invertible) {
    for (int t = 0; t < nt; ++t) {
      Vector8 x;
      for (int i = 0; i < 8; ++i) x.c[i] = w[i][8 + t];
      res.solutions.push_back(x);
    }
    Matrix8 inv;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) inv.at(i, j) = w[i][8 + nt + j];
    res.inverse = inv;
  } else {
    std::array<bool, 8> is_pivot{};
    for (int r = 0; r < res.rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int free = 0; free < 8; ++free) {
      if (is_pivot[free]) continue;
      Vector8 k = Vector8::zero(f);
      k.c[free] = Scalar::one(f);
      for (int r = 0; r < res.rank; ++r) k.c[pivot_col[r]] = -w[r][free];
      res.kernel.push_back(k);
    }
  }
  return res;
}

Scalar det(const Matrix8& m) { return mat_solve(m).det; }

std::optional<Matrix8> inverse(const Matrix8& m) {
  return mat_solve(m).inverse;
}

namespace {

// Returns pivot columns after in-place RREF.
std::vector<int> rref(MatrixG& w) {
  const int rows = static_cast<int>(w.size());
  const int cols = rows ? static_cast<int>(w[0].size()) : 0;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int r = row; r < rows; ++r)
      if (!w[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(w[pr], w[row]);
    Scalar inv = w[row][col].inv();
    for (int j = col; j < cols; ++j) w[row][j] = w[row][j] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || w[r][col].is_zero()) continue;
      Scalar factor = w[r][col];
      for (int j = col; j < cols; ++j) w[r][j] -= factor * w[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Scalar>> kernel_basis(const MatrixG& a,
                                              const Field& f) {
  if (a.empty()) return {};
  MatrixG w = a;
  std::vector<int> pivots = rref(w);
  const int cols = static_cast<int>(a[0].size());
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> k(cols, Scalar::zero(f));
    k[free] = Scalar::one(f);
    for (size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -w[r][free];
    basis.push_back(std::move(k));
  }
  return basis;
}

GenSolve solve_linear(const MatrixG& a, const std::vector<Scalar>& rhs,
                      const Field& f) {
  GenSolve out;
  const int rows = static_cast<int>(a.size());
  assert(rows == static_cast<int>(rhs.size()));
  if (rows == 0) return out;
  const int cols = static_cast<int>(a[0].size());
  MatrixG w = a;
  for (int r = 0; r < rows; ++r) w[r].push_back(rhs[r]);
  std::vector<int> pivots = rref(w);
  // Inconsistent iff some pivot lands in the rhs column.
  if (!pivots.empty() && pivots.back() == cols) return out;
  out.consistent = true;
  out.unique = static_cast<int>(pivots.size()) == cols;
  out.solution.assign(cols, Scalar::zero(f));
  for (size_t r = 0; r < pivots.size(); ++r)
    out.solution[pivots[r]] = w[r][cols];
  return out;
}

}  // namespace comptri
