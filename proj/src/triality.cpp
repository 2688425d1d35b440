#include "triality.hpp"

#include <cassert>

#include "errors.hpp"
#include "session.hpp"

namespace comptri {

namespace {

std::array<Scalar, 64> vec_of(const Matrix8& m) { return m.a; }

}  // namespace

TrialityPair solve_components(const AlgebraK& src,
                              const CompositionAlgebra& dst,
                              const Similarity& h) {
  const Field f = src.field();
  const QuadraticForm& q = *src.form;
  if (!(*dst.alg().form == q))
    throw Error::usage("component solver across different forms");
  std::optional<Vector8> e_src = unit_element(src);
  if (!e_src)
    throw Error::math("Internal", "component solver needs a unital source");
  if (!dst.unit())
    throw Error::math("Internal", "component solver needs a unital target");
  const Vector8& e_dst = *dst.unit();

  // Row-reduce the span of the right multiplications R_{e_k} of dst so
  // arbitrary 64-vectors can be reduced against it.
  std::array<Matrix8, 8> rdst;
  for (int k = 0; k < 8; ++k) rdst[k] = dst.rmul(Vector8::unit(f, k));
  MatrixG span(8, std::vector<Scalar>(64, Scalar::zero(f)));
  for (int k = 0; k < 8; ++k) {
    auto v = vec_of(rdst[k]);
    for (int m = 0; m < 64; ++m) span[k][m] = v[m];
  }
  std::vector<int> pivots;
  {
    int row = 0;
    for (int col = 0; col < 64 && row < 8; ++col) {
      int pr = -1;
      for (int r = row; r < 8; ++r)
        if (!span[r][col].is_zero()) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(span[pr], span[row]);
      Scalar inv = span[row][col].inv();
      for (int j = 0; j < 64; ++j) span[row][j] = span[row][j] * inv;
      for (int r = 0; r < 8; ++r) {
        if (r == row || span[r][col].is_zero()) continue;
        Scalar factor = span[r][col];
        for (int j = 0; j < 64; ++j) span[r][j] -= factor * span[row][j];
      }
      pivots.push_back(col);
      ++row;
    }
    if (row != 8)
      throw Error::math("Internal", "right multiplications do not span rank 8");
  }
  auto residual = [&](std::array<Scalar, 64> v) {
    for (size_t r = 0; r < pivots.size(); ++r) {
      Scalar c = v[pivots[r]];
      if (c.is_zero()) continue;
      for (int j = 0; j < 64; ++j) v[j] -= c * span[r][j];
    }
    return v;
  };

  const Matrix8 hm = h.mat();
  const Matrix8 hinv = h.inverse().mat();
  // Constraints on b: for every basis y, h R^src_y h^{-1} R^dst_b must
  // stay inside span{R^dst}.  Linear in b through R^dst_b.
  std::array<Matrix8, 8> conj;
  for (int j = 0; j < 8; ++j)
    conj[j] = hm * src.rmul(Vector8::unit(f, j)) * hinv;
  MatrixG rows;
  for (int j = 0; j < 8; ++j) {
    std::array<std::array<Scalar, 64>, 8> cols;
    for (int k = 0; k < 8; ++k) cols[k] = residual(vec_of(conj[j] * rdst[k]));
    for (int m = 0; m < 64; ++m) {
      bool nonzero = false;
      for (int k = 0; k < 8 && !nonzero; ++k) nonzero = !cols[k][m].is_zero();
      if (!nonzero) continue;
      std::vector<Scalar> row(8, Scalar::zero(f));
      for (int k = 0; k < 8; ++k) row[k] = cols[k][m];
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty())
    throw Error::math("Degenerate", "component constraints are vacuous");
  std::vector<std::vector<Scalar>> kernel = kernel_basis(rows, f);
  if (kernel.empty())
    throw Error::math("NoSolution",
                      "no triality components (improper input)");
  if (kernel.size() > 1)
    throw Error::math("Degenerate", "component solution space has dimension " +
                                        std::to_string(kernel.size()));
  Vector8 b;
  for (int i = 0; i < 8; ++i) b.c[i] = kernel[0][i];

  Matrix8 rb = dst.rmul(b);
  auto rb_inv = inverse(rb);
  if (!rb_inv)
    throw Error::math("Degenerate", "kernel generator has singular R_b");
  Matrix8 h1m = *rb_inv * hm;
  std::array<Vector8, 8> h2cols;
  for (int j = 0; j < 8; ++j) h2cols[j] = (conj[j] * rb).apply(e_dst);
  Matrix8 h2m = Matrix8::from_cols(h2cols);

  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(hm.apply(src.basis_product(i, j)) ==
            dst.mul(h1m.col(i), h2m.col(j))))
        throw Error::math("Internal", "component identities fail");

  Similarity h1 = Similarity::from_matrix(q, h1m);
  Similarity h2 = Similarity::from_matrix(q, h2m);
  if (!(h1.mu() * h2.mu() == h.mu()))
    throw Error::math("Internal", "component multipliers do not compose");
  return TrialityPair{std::move(h1), std::move(h2)};
}

namespace {

TrialityPair components_via(const Unitalization& u,
                            const CompositionAlgebra& c,
                            const Similarity& h) {
  const QuadraticForm& q = c.form();
  TrialityPair in_h = solve_components(u.hurwitz.alg(), u.hurwitz, h);
  const Matrix8 id = Matrix8::identity(q.field());
  Matrix8 h1m, h2m;
  if (u.f == id && u.g == id) {
    h1m = in_h.h1.mat();
    h2m = in_h.h2.mat();
  } else {
    auto finv = inverse(u.f);
    auto ginv = inverse(u.g);
    if (!finv || !ginv)
      throw Error::math("Internal", "unitalization translations are singular");
    h1m = *finv * in_h.h1.mat() * u.f;
    h2m = *ginv * in_h.h2.mat() * u.g;
  }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(h.mat().apply(c.alg().basis_product(i, j)) ==
            c.mul(h1m.col(i), h2m.col(j))))
        throw Error::math("Internal", "conjugated component identities fail");
  Similarity h1 = Similarity::from_matrix(q, h1m);
  Similarity h2 = Similarity::from_matrix(q, h2m);
  if (h1.sign() != 1 || h2.sign() != 1)
    throw Error::math("Internal", "components are not proper");
  if (!(h1.mu() * h2.mu() == h.mu()))
    throw Error::math("Internal", "component multipliers do not compose");
  return TrialityPair{std::move(h1), std::move(h2)};
}

}  // namespace

TrialityPair triality_components(const CompositionAlgebra& c,
                                 const Similarity& h) {
  if (!c.multiplier().is_one())
    throw Error::math("NotNormalized",
                      "triality components need multiplier 1");
  Unitalization u = unitalize(c);
  return components_via(u, c, h);
}

ProjSimilarity rho(const CompositionAlgebra& c, int r,
                   const ProjSimilarity& h) {
  if (r != 1 && r != 2) throw Error::usage("rho index must be 1 or 2");
  Similarity lift = Similarity::from_matrix(*c.alg().form, h.rep());
  TrialityPair pair = triality_components(c, lift);
  return ProjSimilarity::of(r == 1 ? pair.h1 : pair.h2);
}

ProjSimilarity rho_base(const Session& s, int r, const ProjSimilarity& h) {
  if (r != 1 && r != 2) throw Error::usage("rho index must be 1 or 2");
  Similarity lift = Similarity::from_matrix(s.form(), h.rep());
  TrialityPair pair =
      components_via(s.para_unitalization(), s.para(), lift);
  return ProjSimilarity::of(r == 1 ? pair.h1 : pair.h2);
}

int s3_order(const MarkedAuto& a) {
  int r = ((a.r % 3) + 3) % 3;
  if (r == 0) return a.coset.sign() == 1 ? 1 : 2;
  return a.coset.sign() == 1 ? 3 : 2;
}

std::pair<MarkedAuto, MarkedAuto> marked_auto_of(const Session& s,
                                                 const CompositionAlgebra& c) {
  if (!(*c.alg().form == s.form()))
    throw Error::usage("algebra does not live on the session form");
  SymmetricDecomposition sd = symmetric_decomposition(c);
  const QuadraticForm& q = s.form();
  ProjSimilarity pf =
      ProjSimilarity::of(Similarity::from_matrix(q, sd.f)).inverse();
  ProjSimilarity pg =
      ProjSimilarity::of(Similarity::from_matrix(q, sd.g)).inverse();
  if (sd.sym == s.para())
    return {MarkedAuto{1, pf}, MarkedAuto{2, pg}};

  // Different para-Hurwitz base: align its Hurwitz model onto H0 and
  // fold the alignment coset through rho_base.
  Matrix8 phi = hurwitz_align(sd.hurwitz, s.hurwitz());
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(phi.apply(sd.sym.alg().basis_product(i, j)) ==
            s.para().mul(phi.col(i), phi.col(j))))
        throw Error::math("Internal",
                          "alignment does not carry S' onto the base S0");
  Similarity phi_sim = Similarity::from_matrix(q, phi);
  if (!phi_sim.mu().is_one() || phi_sim.sign() != 1)
    throw Error::math("Internal", "alignment is not a proper isometry");
  ProjSimilarity p = ProjSimilarity::of(phi_sim);
  ProjSimilarity pinv = p.inverse();
  ProjSimilarity x1 = pf.compose(pinv).compose(rho_base(s, 1, p));
  ProjSimilarity x2 = pg.compose(pinv).compose(rho_base(s, 2, p));
  return {MarkedAuto{1, x1}, MarkedAuto{2, x2}};
}

namespace {

std::vector<Vector8> orthogonal_complement(const QuadraticForm& q,
                                           const std::vector<Vector8>& span) {
  const Field f = q.field();
  MatrixG rows;
  for (const Vector8& v : span) {
    Vector8 w = q.bilinear().apply(v);
    std::vector<Scalar> row(w.c.begin(), w.c.end());
    rows.push_back(std::move(row));
  }
  std::vector<std::vector<Scalar>> ker = kernel_basis(rows, f);
  std::vector<Vector8> out;
  for (const auto& k : ker) {
    Vector8 v;
    for (int i = 0; i < 8; ++i) v.c[i] = k[i];
    out.push_back(v);
  }
  return out;
}

Vector8 match_norm(const QuadraticForm& q, const std::vector<Vector8>& basis,
                   const Scalar* target, long budget) {
  try {
    return find_norm_vector_in(q, basis, target, budget);
  } catch (const Error& e) {
    if (e.kind() == "NotFound")
      throw Error(e.status(), "AlignmentNotFound",
                  "could not match a doubling generator norm");
    throw;
  }
}

}  // namespace

Matrix8 hurwitz_align(const CompositionAlgebra& from,
                      const CompositionAlgebra& to, long budget) {
  if (!from.unit() || !to.unit())
    throw Error::math("MissingUnit", "alignment needs unital algebras");
  if (!(*from.alg().form == *to.alg().form))
    throw Error::usage("alignment across different forms");
  const QuadraticForm& q = *from.alg().form;
  const Vector8 e1 = *from.unit();
  const Vector8 e0 = *to.unit();

  std::vector<Vector8> span1 = {e1}, span0 = {e0};
  std::array<Vector8, 3> xs{Vector8::zero(q.field()), Vector8::zero(q.field()),
                            Vector8::zero(q.field())};
  std::array<Vector8, 3> ys = xs;
  for (int stage = 0; stage < 3; ++stage) {
    Vector8 x =
        match_norm(q, orthogonal_complement(q, span1), nullptr, budget);
    Scalar target = q.eval(x);
    Vector8 y =
        match_norm(q, orthogonal_complement(q, span0), &target, budget);
    xs[stage] = x;
    ys[stage] = y;
    if (stage == 0) {
      span1.push_back(x);
      span0.push_back(y);
    } else if (stage == 1) {
      span1.push_back(x);
      span1.push_back(from.mul(xs[0], x));
      span0.push_back(y);
      span0.push_back(to.mul(ys[0], y));
    }
  }

  auto doubled_basis = [](const CompositionAlgebra& h, const Vector8& e,
                          const std::array<Vector8, 3>& g) {
    std::array<Vector8, 8> b;
    b[0] = e;
    b[1] = g[0];
    b[2] = g[1];
    b[3] = h.mul(g[0], g[1]);
    b[4] = g[2];
    b[5] = h.mul(g[0], g[2]);
    b[6] = h.mul(g[1], g[2]);
    b[7] = h.mul(h.mul(g[0], g[1]), g[2]);
    return b;
  };
  Matrix8 m1 = Matrix8::from_cols(doubled_basis(from, e1, xs));
  Matrix8 m0 = Matrix8::from_cols(doubled_basis(to, e0, ys));
  auto m1inv = inverse(m1);
  if (!m1inv)
    throw Error::math("Internal", "doubling generators are degenerate");
  Matrix8 phi = m0 * *m1inv;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(phi.apply(from.alg().basis_product(i, j)) ==
            to.mul(phi.col(i), phi.col(j))))
        throw Error::math("Internal", "alignment is not a homomorphism");
  if (!similarity_multiplier(q, phi).is_one())
    throw Error::math("Internal", "alignment is not an isometry");
  return phi;
}

TrialityPair swap_components(const Session& s, const Similarity& h) {
  if (h.sign() != -1)
    throw Error::math("NoSolution",
                      "swapped components exist only for improper maps");
  Similarity h_plus = h.compose(s.sigma0());
  TrialityPair p = components_via(s.para_unitalization(), s.para(), h_plus);
  Similarity m1 = p.h1.compose(s.sigma0_swap().h1);
  Similarity m2 = p.h2.compose(s.sigma0_swap().h2);
  const CompositionAlgebra& s0 = s.para();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(h.mat().apply(s0.alg().basis_product(i, j)) ==
            s0.mul(m1.mat().col(j), m2.mat().col(i))))
        throw Error::math("Internal", "swapped component identities fail");
  return TrialityPair{std::move(m1), std::move(m2)};
}

MarkedAuto conj_marked(const Session& s, const ProjSimilarity& h,
                       const MarkedAuto& a) {
  int r = ((a.r % 3) + 3) % 3;
  if (r == 0)
    return MarkedAuto{0, h.compose(a.coset).compose(h.inverse())};
  if (h.sign() == 1) {
    Similarity lift = Similarity::from_matrix(s.form(), h.rep());
    TrialityPair p = components_via(s.para_unitalization(), s.para(), lift);
    ProjSimilarity rho_h = ProjSimilarity::of(r == 1 ? p.h1 : p.h2);
    return MarkedAuto{r, h.compose(a.coset).compose(rho_h.inverse())};
  }
  // Conjugation by an improper class swaps the non-trivial twists.
  Similarity lift = Similarity::from_matrix(s.form(), h.rep());
  TrialityPair m = swap_components(s, lift);
  ProjSimilarity m1 = ProjSimilarity::of(m.h1);
  ProjSimilarity m2 = ProjSimilarity::of(m.h2);
  if (r == 1)
    return MarkedAuto{2, h.compose(a.coset).compose(m2.inverse())};
  return MarkedAuto{1, h.compose(a.coset).compose(m1.inverse())};
}

ProjSimilarity apply_marked(const Session& s, const MarkedAuto& a,
                            const ProjSimilarity& x) {
  int r = ((a.r % 3) + 3) % 3;
  ProjSimilarity y = r == 0 ? x : rho_base(s, r, x);
  return a.coset.compose(y).compose(a.coset.inverse());
}

}  // namespace comptri
