#include "clifford.hpp"

#include <bit>
#include <cassert>

#include "errors.hpp"

namespace comptri {

namespace {

// Symmetric Gram diagonalization by congruence, char != 2.
void diagonalize(const Matrix8& gram, Matrix8& p, std::array<Scalar, 8>& d) {
  const Field f = gram.field();
  Matrix8 a = gram;
  p = Matrix8::identity(f);
  auto col_op = [&](int dst, int src, const Scalar& c) {
    // col_dst += c * col_src, applied congruently to a and plainly to p.
    for (int i = 0; i < 8; ++i) a.at(i, dst) += c * a.at(i, src);
    for (int j = 0; j < 8; ++j) a.at(dst, j) += c * a.at(src, j);
    for (int i = 0; i < 8; ++i) p.at(i, dst) += c * p.at(i, src);
  };
  auto col_swap = [&](int x, int y) {
    for (int i = 0; i < 8; ++i) std::swap(a.at(i, x), a.at(i, y));
    for (int j = 0; j < 8; ++j) std::swap(a.at(x, j), a.at(y, j));
    for (int i = 0; i < 8; ++i) std::swap(p.at(i, x), p.at(i, y));
  };
  for (int k = 0; k < 8; ++k) {
    if (a.at(k, k).is_zero()) {
      int l = -1;
      for (int j = k + 1; j < 8 && l < 0; ++j)
        if (!a.at(j, j).is_zero()) l = j;
      if (l >= 0) {
        col_swap(k, l);
      } else {
        for (int j = k + 1; j < 8 && a.at(k, k).is_zero(); ++j)
          if (!a.at(k, j).is_zero()) col_op(k, j, Scalar::one(f));
      }
    }
    if (a.at(k, k).is_zero())
      throw Error::math("Degenerate", "form not diagonalizable (degenerate)");
    Scalar pivot_inv = a.at(k, k).inv();
    for (int j = k + 1; j < 8; ++j) {
      if (a.at(k, j).is_zero()) continue;
      col_op(j, k, -(a.at(k, j) * pivot_inv));
    }
    d[k] = a.at(k, k);
  }
}

int reorder_sign(uint8_t a, uint8_t b) {
  int t = 0;
  for (int bit = 0; bit < 8; ++bit) {
    if (!(b & (1 << bit))) continue;
    t += std::popcount(static_cast<unsigned>(a & ~((2u << bit) - 1)));
  }
  return (t % 2 == 0) ? 1 : -1;
}

}  // namespace

CliffordAlgebra::CliffordAlgebra(const QuadraticForm& q) : q_(q) {
  diagonalize(q.gram(), p_, diag_);
  auto pinv = inverse(p_);
  if (!pinv) throw Error::math("Internal", "diagonalizing basis is singular");
  pinv_ = *pinv;
  for (int i = 0; i < 8; ++i) {
    Vector8 col = p_.col(i);
    if (!(q_.eval(col) == diag_[i]))
      throw Error::math("Internal", "diagonalization norm mismatch");
    for (int j = i + 1; j < 8; ++j)
      if (!q_.eval(col, p_.col(j)).is_zero())
        throw Error::math("Internal", "diagonalizing basis is not orthogonal");
  }
  std::vector<Elem> centre = even_centre();
  // RREF ordering puts 1 first; the second vector has no scalar part.
  centre_z_ = centre[1];
  if (!centre_z_[0].is_zero())
    throw Error::math("Internal", "centre generator has a scalar part");
}

CliffordAlgebra::Elem CliffordAlgebra::zero() const {
  return Elem(256, Scalar::zero(q_.field()));
}

CliffordAlgebra::Elem CliffordAlgebra::one() const { return blade(0); }

CliffordAlgebra::Elem CliffordAlgebra::blade(uint8_t mask) const {
  Elem e = zero();
  e[mask] = Scalar::one(q_.field());
  return e;
}

CliffordAlgebra::Elem CliffordAlgebra::mul(const Elem& x, const Elem& y) const {
  Elem r = zero();
  for (int a = 0; a < 256; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < 256; ++b) {
      if (y[b].is_zero()) continue;
      Scalar coef = x[a] * y[b];
      if (reorder_sign(static_cast<uint8_t>(a), static_cast<uint8_t>(b)) < 0)
        coef = -coef;
      int common = a & b;
      for (int bit = 0; bit < 8; ++bit)
        if (common & (1 << bit)) coef *= diag_[bit];
      r[a ^ b] += coef;
    }
  }
  return r;
}

CliffordAlgebra::Elem CliffordAlgebra::add(const Elem& x, const Elem& y) const {
  Elem r = x;
  for (int i = 0; i < 256; ++i) r[i] += y[i];
  return r;
}

CliffordAlgebra::Elem CliffordAlgebra::neg(const Elem& x) const {
  Elem r = x;
  for (int i = 0; i < 256; ++i) r[i] = -r[i];
  return r;
}

CliffordAlgebra::Elem CliffordAlgebra::scale(const Elem& x,
                                             const Scalar& s) const {
  Elem r = x;
  for (int i = 0; i < 256; ++i) r[i] *= s;
  return r;
}

CliffordAlgebra::Elem CliffordAlgebra::grade1(const Vector8& v) const {
  Vector8 w = pinv_.apply(v);
  Elem e = zero();
  for (int i = 0; i < 8; ++i) e[1 << i] = w.c[i];
  return e;
}

CliffordAlgebra::Elem CliffordAlgebra::reversal(const Elem& x) const {
  Elem r = x;
  for (int m = 0; m < 256; ++m) {
    int k = std::popcount(static_cast<unsigned>(m));
    if ((k * (k - 1) / 2) % 2 != 0) r[m] = -r[m];
  }
  return r;
}

std::vector<CliffordAlgebra::Elem> CliffordAlgebra::even_centre() const {
  const Field f = q_.field();
  std::vector<int> even_masks;
  for (int m = 0; m < 256; ++m)
    if (std::popcount(static_cast<unsigned>(m)) % 2 == 0)
      even_masks.push_back(m);
  std::vector<int> unknown_index(256, -1);
  for (size_t i = 0; i < even_masks.size(); ++i)
    unknown_index[even_masks[i]] = static_cast<int>(i);

  // z x - x z = 0 against the algebra generators x = e_0 e_j of C_0.
  MatrixG rows;
  for (int j = 1; j < 8; ++j) {
    Elem g = mul(blade(1), blade(static_cast<uint8_t>(1 << j)));
    MatrixG block(even_masks.size(),
                  std::vector<Scalar>(even_masks.size(), Scalar::zero(f)));
    for (size_t u = 0; u < even_masks.size(); ++u) {
      Elem beta = blade(static_cast<uint8_t>(even_masks[u]));
      Elem comm = add(mul(beta, g), neg(mul(g, beta)));
      for (int out = 0; out < 256; ++out) {
        if (comm[out].is_zero()) continue;
        assert(unknown_index[out] >= 0);
        block[unknown_index[out]][u] = comm[out];
      }
    }
    for (auto& row : block) {
      bool nonzero = false;
      for (const Scalar& s : row)
        if (!s.is_zero()) {
          nonzero = true;
          break;
        }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  std::vector<std::vector<Scalar>> kernel = kernel_basis(rows, f);
  if (kernel.size() != 2)
    throw Error::math("Internal", "even Clifford centre has dimension " +
                                      std::to_string(kernel.size()));
  std::vector<Elem> out;
  for (const auto& k : kernel) {
    Elem e = zero();
    for (size_t u = 0; u < even_masks.size(); ++u) e[even_masks[u]] = k[u];
    out.push_back(std::move(e));
  }
  // Put the scalar direction first.
  if (out[0][0].is_zero()) std::swap(out[0], out[1]);
  if (!out[1][0].is_zero()) {
    Scalar c = out[1][0] / out[0][0];
    out[1] = add(out[1], scale(out[0], -c));
  }
  return out;
}

CliffordAlgebra::Elem CliffordAlgebra::lift_even(const Similarity& f,
                                                 const Elem& x) const {
  Scalar mu_inv = f.mu().inv();
  Elem out = zero();
  std::array<Elem, 8> images;  // f(p_i) as grade-1 elements
  for (int i = 0; i < 8; ++i) images[i] = grade1(f.mat().apply(p_.col(i)));
  for (int m = 0; m < 256; ++m) {
    if (x[m].is_zero()) continue;
    int k = std::popcount(static_cast<unsigned>(m));
    assert(k % 2 == 0);
    Elem acc = one();
    for (int bit = 0; bit < 8; ++bit)
      if (m & (1 << bit)) acc = mul(acc, images[bit]);
    Scalar coef = x[m];
    for (int t = 0; t < k / 2; ++t) coef *= mu_inv;
    out = add(out, scale(acc, coef));
  }
  return out;
}

int CliffordAlgebra::properness_via_centre(const Similarity& f) const {
  Elem image = lift_even(f, centre_z_);
  if (image == centre_z_) return 1;
  if (image == neg(centre_z_)) return -1;
  throw Error::math("Internal", "lift does not act by +-1 on the centre");
}

}  // namespace comptri
