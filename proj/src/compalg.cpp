#include "compalg.hpp"

#include <cassert>
#include <vector>

#include "errors.hpp"

namespace comptri {

Vector8 AlgebraK::mul(const Vector8& x, const Vector8& y) const {
  Vector8 r = Vector8::zero(field());
  for (int i = 0; i < 8; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (y.c[j].is_zero()) continue;
      Scalar w = x.c[i] * y.c[j];
      const Vector8& g = basis_product(i, j);
      for (int k = 0; k < 8; ++k) {
        if (g.c[k].is_zero()) continue;
        r.c[k] += w * g.c[k];
      }
    }
  }
  return r;
}

Matrix8 AlgebraK::lmul(const Vector8& c) const {
  std::array<Vector8, 8> cols;
  for (int j = 0; j < 8; ++j)
    cols[j] = mul(c, Vector8::unit(field(), j));
  return Matrix8::from_cols(cols);
}

Matrix8 AlgebraK::rmul(const Vector8& c) const {
  std::array<Vector8, 8> cols;
  for (int j = 0; j < 8; ++j)
    cols[j] = mul(Vector8::unit(field(), j), c);
  return Matrix8::from_cols(cols);
}

bool AlgebraK::operator==(const AlgebraK& o) const {
  if (!(*form == *o.form)) return false;
  for (int i = 0; i < 64; ++i)
    if (!(gamma[i] == o.gamma[i])) return false;
  return true;
}

namespace {

std::vector<Vector8> polarization_grid(const Field& f) {
  std::vector<Vector8> grid;
  grid.reserve(36);
  for (int i = 0; i < 8; ++i) grid.push_back(Vector8::unit(f, i));
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      grid.push_back(Vector8::unit(f, i) + Vector8::unit(f, j));
  return grid;
}

}  // namespace

Scalar check_composition(const AlgebraK& a) {
  const QuadraticForm& q = *a.form;
  std::vector<Vector8> grid = polarization_grid(a.field());
  std::vector<Scalar> norms;
  norms.reserve(grid.size());
  for (const Vector8& v : grid) norms.push_back(q.eval(v));

  std::optional<Scalar> lambda;
  for (size_t i = 0; i < grid.size() && !lambda; ++i) {
    if (norms[i].is_zero()) continue;
    for (size_t j = 0; j < grid.size() && !lambda; ++j) {
      if (norms[j].is_zero()) continue;
      lambda = q.eval(a.mul(grid[i], grid[j])) / (norms[i] * norms[j]);
    }
  }
  if (!lambda)
    throw Error::math("NoAnisotropicPair",
                      "no anisotropic pair on the polarization grid");
  for (size_t i = 0; i < grid.size(); ++i)
    for (size_t j = 0; j < grid.size(); ++j)
      if (q.eval(a.mul(grid[i], grid[j])) != *lambda * norms[i] * norms[j])
        throw Error::math("NotComposition",
                          "n(xy) = lambda n(x) n(y) fails on the grid");
  if (lambda->is_zero())
    throw Error::math("NotComposition", "multiplier vanishes");
  return *lambda;
}

CompositionAlgebra CompositionAlgebra::certify(AlgebraK a) {
  Scalar lambda = check_composition(a);
  std::optional<Vector8> unit = unit_element(a);
  return CompositionAlgebra(std::move(a), std::move(lambda), std::move(unit));
}

namespace {

using Coeffs = std::vector<Scalar>;

Coeffs cd_conj(const Coeffs& x) {
  if (x.size() == 1) return x;
  size_t h = x.size() / 2;
  Coeffs r(x.size(), Scalar::zero(x[0].field()));
  Coeffs top(x.begin(), x.begin() + h);
  Coeffs ct = cd_conj(top);
  for (size_t i = 0; i < h; ++i) r[i] = ct[i];
  for (size_t i = h; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

// (x,y)(u,v) = (xu + d conj(v) y, v x + y conj(u)), d the parameter of
// the current doubling stage.
Coeffs cd_mul(const Coeffs& x, const Coeffs& y,
              std::span<const Scalar> deltas) {
  if (x.size() == 1) return {x[0] * y[0]};
  size_t h = x.size() / 2;
  const Scalar& d = deltas[deltas.size() - 1];
  auto lo = [&](const Coeffs& v) { return Coeffs(v.begin(), v.begin() + h); };
  auto hi = [&](const Coeffs& v) { return Coeffs(v.begin() + h, v.end()); };
  auto sub = deltas.subspan(0, deltas.size() - 1);
  Coeffs x1 = lo(x), x2 = hi(x), y1 = lo(y), y2 = hi(y);
  Coeffs t1 = cd_mul(x1, y1, sub);                  // xu
  Coeffs t2 = cd_mul(cd_conj(y2), x2, sub);         // conj(v) y
  Coeffs t3 = cd_mul(y2, x1, sub);                  // v x
  Coeffs t4 = cd_mul(x2, cd_conj(y1), sub);         // y conj(u)
  Coeffs r(x.size(), Scalar::zero(x[0].field()));
  for (size_t i = 0; i < h; ++i) {
    r[i] = t1[i] + d * t2[i];
    r[h + i] = t3[i] + t4[i];
  }
  return r;
}

}  // namespace

CompositionAlgebra cayley_dickson(const Scalar& a, const Scalar& b,
                                  const Scalar& c) {
  const Field f = a.field();
  auto form =
      std::make_shared<const QuadraticForm>(QuadraticForm::pfister3(a, b, c));
  std::array<Scalar, 3> deltas = {a, b, c};
  AlgebraK alg;
  alg.form = form;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Coeffs x(8, Scalar::zero(f)), y(8, Scalar::zero(f));
      x[i] = Scalar::one(f);
      y[j] = Scalar::one(f);
      Coeffs p = cd_mul(x, y, deltas);
      Vector8 v;
      for (int k = 0; k < 8; ++k) v.c[k] = p[k];
      alg.basis_product(i, j) = v;
    }
  CompositionAlgebra out = CompositionAlgebra::certify(std::move(alg));
  if (!out.multiplier().is_one() || !out.unit() ||
      !(*out.unit() == Vector8::unit(f, 0)))
    throw Error::math("Internal", "doubling certification failed");
  return out;
}

namespace {

// Zorn vector matrices (a, x; y, b) with a, b scalars and x, y in k^3:
// coordinates (a, x1, x2, x3, y1, y2, y3, b), norm ab - x.y.
Coeffs zorn_mul(const Field& f, const Coeffs& p, const Coeffs& q) {
  auto dot = [&](const Scalar* u, const Scalar* v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  };
  auto cross = [&](const Scalar* u, const Scalar* v, Scalar* out) {
    out[0] = u[1] * v[2] - u[2] * v[1];
    out[1] = u[2] * v[0] - u[0] * v[2];
    out[2] = u[0] * v[1] - u[1] * v[0];
  };
  Coeffs r(8, Scalar::zero(f));
  const Scalar *x1 = &p[1], *y1 = &p[4], *x2 = &q[1], *y2 = &q[4];
  Scalar xx[3], yy[3];
  cross(y1, y2, xx);
  cross(x1, x2, yy);
  r[0] = p[0] * q[0] + dot(x1, y2);
  r[7] = p[7] * q[7] + dot(y1, x2);
  for (int t = 0; t < 3; ++t) {
    r[1 + t] = p[0] * x2[t] + q[7] * x1[t] - xx[t];
    r[4 + t] = q[0] * y1[t] + p[7] * y2[t] + yy[t];
  }
  return r;
}

}  // namespace

CompositionAlgebra zorn_split(const Field& f) {
  const Scalar one = Scalar::one(f);
  auto form = std::make_shared<const QuadraticForm>(
      QuadraticForm::pfister3(one, one, one));
  // Columns: session basis vectors written in Zorn coordinates.  The
  // combinations are chosen so the Gram matrix lands exactly on
  // <1,-1,-1,1,-1,1,1,-1>.
  auto zc = [&](std::initializer_list<std::pair<int, int>> terms) {
    Coeffs v(8, Scalar::zero(f));
    for (auto [idx, sgn] : terms) v[idx] = Scalar::of_int(f, sgn);
    return v;
  };
  std::array<Coeffs, 8> to_zorn = {
      zc({{0, 1}, {7, 1}}),   // E1 + E2, n = 1
      zc({{0, 1}, {7, -1}}),  // E1 - E2, n = -1
      zc({{1, 1}, {4, 1}}),   // u1 + v1, n = -1
      zc({{1, 1}, {4, -1}}),  // u1 - v1, n = +1
      zc({{2, 1}, {5, 1}}),   // u2 + v2, n = -1
      zc({{2, 1}, {5, -1}}),  // u2 - v2, n = +1
      zc({{3, 1}, {6, -1}}),  // u3 - v3, n = +1
      zc({{3, 1}, {6, 1}}),   // u3 + v3, n = -1
  };
  Matrix8 p = Matrix8::zero(f);
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) p.at(i, j) = to_zorn[j][i];
  auto pinv = inverse(p);
  if (!pinv) throw Error::math("Internal", "Zorn basis change is singular");
  AlgebraK alg;
  alg.form = form;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Coeffs prod = zorn_mul(f, to_zorn[i], to_zorn[j]);
      Vector8 pv;
      for (int k = 0; k < 8; ++k) pv.c[k] = prod[k];
      alg.basis_product(i, j) = pinv->apply(pv);
    }
  CompositionAlgebra out = CompositionAlgebra::certify(std::move(alg));
  if (!out.multiplier().is_one() || !out.unit())
    throw Error::math("Internal", "Zorn certification failed");
  return out;
}

AlgebraK isotope(const AlgebraK& a, const Matrix8& f, const Matrix8& g) {
  if (!mat_solve(f).invertible || !mat_solve(g).invertible)
    throw Error::math("Singular", "isotope maps must be invertible");
  AlgebraK r;
  r.form = a.form;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      r.basis_product(i, j) = a.mul(f.col(i), g.col(j));
  return r;
}

AlgebraK scalar_multiple(const AlgebraK& a, const Scalar& lambda) {
  if (lambda.is_zero())
    throw Error::math("ZeroParameter", "scalar multiple by zero");
  AlgebraK r;
  r.form = a.form;
  for (int i = 0; i < 64; ++i) r.gamma[i] = a.gamma[i] * lambda;
  return r;
}

std::optional<Vector8> unit_element(const AlgebraK& a) {
  const Field f = a.field();
  // 128 linear conditions L_e = Id, R_e = Id on the 8 coordinates of e.
  MatrixG rows;
  std::vector<Scalar> rhs;
  rows.reserve(128);
  rhs.reserve(128);
  for (int j = 0; j < 8; ++j)
    for (int m = 0; m < 8; ++m) {
      std::vector<Scalar> lrow(8, Scalar::zero(f)), rrow(8, Scalar::zero(f));
      for (int k = 0; k < 8; ++k) {
        lrow[k] = a.basis_product(k, j).c[m];
        rrow[k] = a.basis_product(j, k).c[m];
      }
      Scalar d = (j == m) ? Scalar::one(f) : Scalar::zero(f);
      rows.push_back(std::move(lrow));
      rhs.push_back(d);
      rows.push_back(std::move(rrow));
      rhs.push_back(d);
    }
  GenSolve sol = solve_linear(rows, rhs, f);
  if (!sol.consistent) return std::nullopt;
  if (!sol.unique)
    throw Error::math("Internal", "unit system is underdetermined");
  Vector8 e;
  for (int i = 0; i < 8; ++i) e.c[i] = sol.solution[i];
  return e;
}

Unitalization unitalize(const CompositionAlgebra& c) {
  if (!c.multiplier().is_one())
    throw Error::math("NotNormalized",
                      "unitalization needs multiplier 1, got " +
                          c.multiplier().str());
  const QuadraticForm& q = c.form();
  Vector8 v = find_norm_vector(q, nullptr);
  Vector8 e = c.mul(v, v) * q.eval(v).inv();  // n(e) = 1
  Matrix8 f = c.rmul(e);
  Matrix8 g = c.lmul(e);
  auto finv = inverse(f);
  auto ginv = inverse(g);
  if (!finv || !ginv)
    throw Error::math("Internal", "translation by the idempotent is singular");
  AlgebraK halg;
  halg.form = c.alg().form;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      halg.basis_product(i, j) = c.mul(finv->col(i), ginv->col(j));
  CompositionAlgebra h = CompositionAlgebra::certify(std::move(halg));
  // The unit of C_{R_e^{-1}, L_e^{-1}} is e.e (it equals e exactly when
  // e is idempotent, e.g. when C was unital to begin with).
  Vector8 u = c.mul(e, e);
  if (!h.unit() || !(*h.unit() == u))
    throw Error::math("Internal", "unitalization produced no unit");
  // C = H_{f,g} must hold on the nose.
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(c.alg().basis_product(i, j) == h.mul(f.col(i), g.col(j))))
        throw Error::math("Internal", "unitalization round-trip failed");
  return Unitalization{std::move(h), std::move(f), std::move(g), std::move(u)};
}

Matrix8 canonical_involution(const CompositionAlgebra& h) {
  if (!h.unit())
    throw Error::math("MissingUnit", "canonical involution needs a unit");
  const QuadraticForm& q = h.form();
  const Vector8& e = *h.unit();
  if (!q.eval(e).is_one())
    throw Error::math("Internal", "unit has norm != 1");
  const Field f = h.field();
  Matrix8 m = Matrix8::zero(f);
  Vector8 w = q.bilinear().apply(e);  // w_j = b_n(e_j, e)
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) {
      m.at(i, j) = e.c[i] * w.c[j];
      if (i == j) m.at(i, j) -= Scalar::one(f);
    }
  return m;
}

CompositionAlgebra para_hurwitz(const CompositionAlgebra& h) {
  Matrix8 i = canonical_involution(h);
  CompositionAlgebra s = CompositionAlgebra::certify(isotope(h.alg(), i, i));
  if (!s.multiplier().is_one() || !is_symmetric(s.alg()))
    throw Error::math("Internal", "para-Hurwitz construction failed");
  return s;
}

SymmetricDecomposition symmetric_decomposition(const CompositionAlgebra& c) {
  Unitalization u = unitalize(c);
  Matrix8 i = canonical_involution(u.hurwitz);
  CompositionAlgebra s = para_hurwitz(u.hurwitz);
  Matrix8 f = i * u.f;
  Matrix8 g = i * u.g;
  // C = S_{f,g} exactly.
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (!(c.alg().basis_product(a, b) == s.mul(f.col(a), g.col(b))))
        throw Error::math("Internal", "symmetric decomposition round-trip");
  return SymmetricDecomposition{std::move(s), std::move(f), std::move(g),
                                std::move(u.hurwitz), std::move(u.e)};
}

bool is_symmetric(const AlgebraK& a) {
  const QuadraticForm& q = *a.form;
  const Field f = a.field();
  for (int i = 0; i < 8; ++i) {
    Vector8 ei = Vector8::unit(f, i);
    for (int j = 0; j < 8; ++j) {
      Vector8 ej = Vector8::unit(f, j);
      Vector8 eij = a.basis_product(i, j);
      for (int k = 0; k < 8; ++k) {
        Vector8 ek = Vector8::unit(f, k);
        if (q.eval(eij, ek) != q.eval(ei, a.basis_product(j, k)))
          return false;
      }
    }
  }
  return true;
}

AlgebraK transport_isotope(const Matrix8& h, const AlgebraK& a,
                           const Matrix8& f, const Matrix8& g,
                           const AlgebraK& b) {
  auto hinv = inverse(h);
  if (!hinv)
    throw Error::math("NotAHomomorphism", "transport by a singular map");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(h.apply(a.basis_product(i, j)) == b.mul(h.col(i), h.col(j))))
        throw Error::math("NotAHomomorphism",
                          "h does not intertwine the multiplications");
  AlgebraK out = isotope(b, h * f * *hinv, h * g * *hinv);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(h.apply(isotope(a, f, g).basis_product(i, j)) ==
            out.mul(h.col(i), h.col(j))))
        throw Error::math("Internal", "transported isotope is not isomorphic");
  return out;
}

NormalizationChain normalization_chain(const CompositionAlgebra& h,
                                       const Matrix8& F, const Matrix8& G) {
  if (!h.unit()) throw Error::math("MissingUnit", "base algebra must be unital");
  const QuadraticForm& q = h.form();
  const Field k = h.field();
  similarity_multiplier(q, F);  // throws NotASimilarity when F not in GO(n)
  similarity_multiplier(q, G);
  const Vector8& e = *h.unit();
  auto Finv = inverse(F);
  auto Ginv = inverse(G);
  if (!Finv || !Ginv)
    throw Error::math("NonInvertible", "similarity inputs must be invertible");
  Vector8 a = Finv->apply(e);
  Vector8 b = Ginv->apply(e);
  if (q.eval(a).is_zero() || q.eval(b).is_zero())
    throw Error::math("NonInvertible",
                      "translation element is isotropic; R_a or L_b singular");

  Vector8 ab = h.mul(a, b);
  Scalar lambda = q.eval(ab);
  if (!(lambda == q.eval(a) * q.eval(b)))
    throw Error::math("Internal", "n(ab) != n(a)n(b)");
  Matrix8 ih = canonical_involution(h);
  Vector8 eprime = ih.apply(ab) * lambda.inv();  // (ab)^{-1} in H

  Matrix8 Ra = h.rmul(a);
  Matrix8 Lb = h.lmul(b);
  CompositionAlgebra hp = CompositionAlgebra::certify(isotope(h.alg(), Ra, Lb));
  if (!(hp.multiplier() == lambda))
    throw Error::math("Internal", "H' multiplier is not n(ab)");
  if (!hp.unit() || !(*hp.unit() == eprime))
    throw Error::math("Internal", "H' unit is not (ab)^{-1}");

  // Conjugation of H': fixes e', negates its orthogonal complement.
  // n(e') = lambda^{-1}, hence the normalization factor.
  Matrix8 ip = Matrix8::zero(k);
  Vector8 w = q.bilinear().apply(eprime);
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) {
      ip.at(i, j) = lambda * eprime.c[i] * w.c[j];
      if (i == j) ip.at(i, j) -= Scalar::one(k);
    }
  if (!(ip * ip == Matrix8::identity(k)))
    throw Error::math("Internal", "i' is not involutive");
  if (!similarity_multiplier(q, ip).is_one())
    throw Error::math("Internal", "i' is not an isometry");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Vector8 lhs = ip.apply(hp.alg().basis_product(i, j));
      Vector8 rhs = hp.mul(ip.col(j), ip.col(i));
      if (!(lhs == rhs))
        throw Error::math("Internal", "i' is not an anti-automorphism of H'");
    }

  CompositionAlgebra sp = CompositionAlgebra::certify(isotope(hp.alg(), ip, ip));
  if (!(sp.multiplier() == lambda) || !is_symmetric(sp.alg()))
    throw Error::math("Internal", "S' is not symmetric generalized");

  auto mu = lambda.sqrt();
  if (!mu)
    throw Error::math("NotSquare",
                      "multiplier n(ab) = " + lambda.str() +
                          " is not a square; cannot rescale to multiplier 1");
  CompositionAlgebra t =
      CompositionAlgebra::certify(scalar_multiple(sp.alg(), mu->inv()));
  if (!t.multiplier().is_one() || !is_symmetric(t.alg()))
    throw Error::math("Internal", "normalized algebra is not symmetric");

  Matrix8 f = F * ih * Ra * ip;
  Matrix8 g = G * ih * Lb * ip;
  if (!similarity_multiplier(q, f).is_one() ||
      !similarity_multiplier(q, g).is_one())
    throw Error::math("Internal", "recovered f, g are not isometries");

  return NormalizationChain{std::move(t),  std::move(f),      std::move(g),
                            std::move(hp), std::move(ip),     std::move(sp),
                            std::move(lambda), std::move(*mu), std::move(eprime),
                            std::move(a),  std::move(b)};
}

}  // namespace comptri
