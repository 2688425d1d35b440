#include "quadform.hpp"

#include <cassert>

#include "errors.hpp"

namespace comptri {

QuadraticForm QuadraticForm::pfister3(const Scalar& a, const Scalar& b,
                                      const Scalar& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw Error::math("ZeroParameter", "Pfister parameters must be nonzero");
  const Field f = a.field();
  if (b.field() != f || c.field() != f)
    throw Error::usage("Pfister parameters from different fields");
  Scalar one = Scalar::one(f);
  std::array<Scalar, 8> d = {one, -a, -b, a * b, -c, a * c, b * c, -(a * b * c)};
  Matrix8 m = Matrix8::zero(f);
  for (int i = 0; i < 8; ++i) m.at(i, i) = d[i];
  QuadraticForm q(m, m + m);
  q.pfister_ = {a, b, c};
  return q;
}

QuadraticForm QuadraticForm::from_gram(const Matrix8& m) {
  if (!(m == m.transpose()))
    throw Error::math("NotSymmetric", "Gram matrix must be symmetric");
  Matrix8 bil = m + m;
  if (!mat_solve(bil).invertible)
    throw Error::math("Degenerate", "quadratic form is degenerate");
  return QuadraticForm(m, bil);
}

Scalar QuadraticForm::eval(const Vector8& x) const {
  Scalar acc = Scalar::zero(field());
  for (int i = 0; i < 8; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (gram_.at(i, j).is_zero() || x.c[j].is_zero()) continue;
      acc += x.c[i] * gram_.at(i, j) * x.c[j];
    }
  }
  return acc;
}

Scalar QuadraticForm::eval(const Vector8& x, const Vector8& y) const {
  Scalar acc = Scalar::zero(field());
  for (int i = 0; i < 8; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (bil_.at(i, j).is_zero() || y.c[j].is_zero()) continue;
      acc += x.c[i] * bil_.at(i, j) * y.c[j];
    }
  }
  return acc;
}

Scalar similarity_multiplier(const QuadraticForm& q, const Matrix8& f) {
  const Matrix8& b = q.bilinear();
  Matrix8 lhs = f.transpose() * b * f;
  // Read mu off the first nonzero entry of B, then demand equality
  // everywhere.
  Scalar mu = Scalar::zero(q.field());
  bool found = false;
  for (int i = 0; i < 64 && !found; ++i) {
    if (!b.a[i].is_zero()) {
      mu = lhs.a[i] / b.a[i];
      found = true;
    }
  }
  assert(found);  // B is non-degenerate
  if (mu.is_zero())
    throw Error::math("NotASimilarity", "singular map is not a similarity");
  for (int i = 0; i < 64; ++i)
    if (lhs.a[i] != mu * b.a[i])
      throw Error::math("NotASimilarity",
                        "f^T B f is not a scalar multiple of B");
  return mu;
}

int is_proper(const QuadraticForm& q, const Matrix8& f) {
  Scalar mu = similarity_multiplier(q, f);
  Scalar mu4 = mu * mu * mu * mu;
  Scalar d = det(f);
  if (d == mu4) return 1;
  if (d == -mu4) return -1;
  throw Error::math("Internal", "det f != +-mu^4 for a similarity");
}

Matrix8 adjoint(const QuadraticForm& q, const Matrix8& f) {
  auto binv = inverse(q.bilinear());
  if (!binv) throw Error::math("Internal", "polar form is singular");
  return *binv * f.transpose() * q.bilinear();
}

namespace {

Vector8 lin_comb(std::span<const Vector8> basis,
                 std::span<const Scalar> coef) {
  Vector8 v = Vector8::zero(basis[0].field());
  for (size_t i = 0; i < basis.size(); ++i) v = v + basis[i] * coef[i];
  return v;
}

bool norm_matches(const QuadraticForm& q, const Vector8& v,
                  const Scalar* target) {
  Scalar n = q.eval(v);
  return target ? n == *target : !n.is_zero();
}

}  // namespace

Vector8 find_norm_vector_in(const QuadraticForm& q,
                            std::span<const Vector8> basis,
                            const Scalar* target, long budget) {
  const Field f = q.field();
  const int m = static_cast<int>(basis.size());
  long used = 0;
  auto try_vec = [&](const Vector8& v) -> bool {
    ++used;
    return !v.is_zero() && norm_matches(q, v, target);
  };

  // Over F_p the sweep is effectively exhaustive and ignores the
  // budget; over Q every evaluation counts against it.
  for (int i = 0; i < m; ++i) {
    if (!f.is_fp() && used >= budget) break;
    if (try_vec(basis[i])) return basis[i];
  }

  if (f.is_fp()) {
    const uint32_t p = f.p();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        for (uint32_t t = 1; t < p; ++t) {
          Vector8 v = basis[i] + basis[j] * Scalar::of_fp(p, t);
          if (try_vec(v)) return v;
        }
      }
    // Full enumeration when p^m is small enough to be worth it.
    long total = 1;
    bool small = true;
    for (int i = 0; i < m && small; ++i) {
      total *= p;
      if (total > 2000000) small = false;
    }
    if (small) {
      std::vector<uint32_t> idx(m, 0);
      for (;;) {
        std::vector<Scalar> coef;
        coef.reserve(m);
        for (int i = 0; i < m; ++i) coef.push_back(Scalar::of_fp(p, idx[i]));
        Vector8 v = lin_comb(basis, coef);
        if (try_vec(v)) return v;
        int k = 0;
        while (k < m && ++idx[k] == p) idx[k++] = 0;
        if (k == m) break;
      }
      throw Error::math("NotFound", "no vector of the requested norm");
    }
    throw Error::budget("NotFound", "norm-representation sweep exhausted");
  }

  // Q: bounded sweep over small integer combinations, increasing height.
  for (long height = 1; used < budget; ++height) {
    // supports of size 1 and 2 with coefficients in [-height, height]
    for (int i = 0; i < m && used < budget; ++i) {
      for (long ci = -height; ci <= height; ++ci) {
        if (ci == 0) continue;
        Vector8 vi = basis[i] * Scalar::of_int(f, ci);
        if (try_vec(vi)) return vi;
        for (int j = i + 1; j < m && used < budget; ++j)
          for (long cj = -height; cj <= height && used < budget; ++cj) {
            if (cj == 0) continue;
            Vector8 v = vi + basis[j] * Scalar::of_int(f, cj);
            if (try_vec(v)) return v;
          }
      }
    }
    // supports of size 3 once small heights are exhausted
    for (int i = 0; i < m && used < budget; ++i)
      for (int j = i + 1; j < m && used < budget; ++j)
        for (int k = j + 1; k < m && used < budget; ++k)
          for (long ci = -height; ci <= height && used < budget; ++ci)
            for (long cj = -height; cj <= height && used < budget; ++cj)
              for (long ck = -height; ck <= height && used < budget; ++ck) {
                if (ci == 0 || cj == 0 || ck == 0) continue;
                Vector8 v = basis[i] * Scalar::of_int(f, ci) +
                            basis[j] * Scalar::of_int(f, cj) +
                            basis[k] * Scalar::of_int(f, ck);
                if (try_vec(v)) return v;
              }
  }
  throw Error::budget("NotFound",
                      "norm-representation search budget exhausted over Q");
}

Vector8 find_norm_vector(const QuadraticForm& q, const Scalar* target,
                         long budget) {
  std::array<Vector8, 8> basis;
  for (int i = 0; i < 8; ++i) basis[i] = Vector8::unit(q.field(), i);
  return find_norm_vector_in(q, basis, target, budget);
}

}  // namespace comptri
