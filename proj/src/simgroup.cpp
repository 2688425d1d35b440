#include "simgroup.hpp"

#include <cassert>

#include "errors.hpp"

namespace comptri {

Similarity Similarity::from_matrix(const QuadraticForm& q, Matrix8 m) {
  Scalar mu = similarity_multiplier(q, m);
  int sign = is_proper(q, m);
  return Similarity(std::move(m), std::move(mu), sign);
}

Similarity Similarity::inverse() const {
  auto inv = comptri::inverse(mat_);
  if (!inv) throw Error::math("Internal", "similarity is singular");
  return Similarity(*inv, mu_.inv(), sign_);
}

Matrix8 ProjSimilarity::canonicalize(const Matrix8& m) {
  const Field f = m.field();
  int lead = -1;
  for (int i = 0; i < 64 && lead < 0; ++i)
    if (!m.a[i].is_zero()) lead = i;
  assert(lead >= 0);
  if (f.is_fp()) return m * m.a[lead].inv();
  // Clear to coprime integers with positive leading entry.
  mpz_class den = 1;
  for (int i = 0; i < 64; ++i)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
            m.a[i].rational().get_den_mpz_t());
  mpz_class gcd = 0;
  for (int i = 0; i < 64; ++i) {
    mpz_class num = m.a[i].rational().get_num() * den /
                    m.a[i].rational().get_den();
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
  }
  assert(gcd != 0);
  mpq_class scale(den, gcd);
  scale.canonicalize();
  if (m.a[lead].rational() < 0) scale = -scale;
  return m * Scalar::of_mpq(scale);
}

ProjSimilarity ProjSimilarity::of(const Similarity& s) {
  return ProjSimilarity(canonicalize(s.mat()), s.sign());
}

bool ProjSimilarity::is_identity() const {
  return rep_ == Matrix8::identity(rep_.field());
}

ProjSimilarity ProjSimilarity::compose(const ProjSimilarity& o) const {
  return ProjSimilarity(canonicalize(rep_ * o.rep_), sign_ * o.sign_);
}

ProjSimilarity ProjSimilarity::inverse() const {
  auto inv = comptri::inverse(rep_);
  if (!inv) throw Error::math("Internal", "representative is singular");
  return ProjSimilarity(canonicalize(*inv), sign_);
}

Similarity reflect(const QuadraticForm& q, const Vector8& u) {
  Scalar nu = q.eval(u);
  if (nu.is_zero())
    throw Error::math("Isotropic", "cannot reflect along an isotropic vector");
  const Field f = q.field();
  Vector8 w = q.bilinear().apply(u);  // w_j = b_n(e_j, u)
  Scalar ninv = nu.inv();
  Matrix8 m = Matrix8::identity(f);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m.at(i, j) -= u.c[i] * w.c[j] * ninv;
  return Similarity::from_matrix(q, m);
}

namespace {

struct ImageState {
  int rank = 0;
  bool totally_isotropic = true;
};

ImageState image_state(const QuadraticForm& q, const Matrix8& m) {
  Matrix8 f = m - Matrix8::identity(m.field());
  ImageState st;
  SolveResult sr = mat_solve(f);
  st.rank = sr.rank;
  if (st.rank == 0) {
    st.totally_isotropic = true;
    return st;
  }
  // Column-space basis via the transpose's row reduction.
  MatrixG rows(8, std::vector<Scalar>(8, Scalar::zero(m.field())));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) rows[j][i] = f.at(i, j);
  // Gaussian elimination on rows; nonzero rows span im(f).
  std::vector<Vector8> basis;
  {
    MatrixG w = rows;
    int row = 0;
    for (int col = 0; col < 8 && row < 8; ++col) {
      int pr = -1;
      for (int r = row; r < 8; ++r)
        if (!w[r][col].is_zero()) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(w[pr], w[row]);
      Scalar inv = w[row][col].inv();
      for (int j = col; j < 8; ++j) w[row][j] = w[row][j] * inv;
      for (int r = 0; r < 8; ++r) {
        if (r == row || w[r][col].is_zero()) continue;
        Scalar factor = w[r][col];
        for (int j = col; j < 8; ++j) w[r][j] -= factor * w[row][j];
      }
      ++row;
    }
    for (int r = 0; r < row; ++r) {
      Vector8 v;
      for (int j = 0; j < 8; ++j) v.c[j] = w[r][j];
      basis.push_back(v);
    }
  }
  st.totally_isotropic = true;
  for (size_t i = 0; i < basis.size() && st.totally_isotropic; ++i) {
    if (!q.eval(basis[i]).is_zero()) st.totally_isotropic = false;
    for (size_t j = i + 1; j < basis.size() && st.totally_isotropic; ++j)
      if (!q.eval(basis[i], basis[j]).is_zero()) st.totally_isotropic = false;
  }
  return st;
}

std::vector<Vector8> candidate_points(const Field& f) {
  std::vector<Vector8> xs;
  for (int i = 0; i < 8; ++i) xs.push_back(Vector8::unit(f, i));
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      xs.push_back(Vector8::unit(f, i) + Vector8::unit(f, j));
      xs.push_back(Vector8::unit(f, i) - Vector8::unit(f, j));
    }
  return xs;
}

}  // namespace

std::vector<Vector8> cartan_dieudonne(const QuadraticForm& q,
                                      const Similarity& h) {
  if (!h.mu().is_one())
    throw Error::math("NotAnIsometry",
                      "reflection factorization needs an isometry");
  const Field f = q.field();
  const Matrix8 id = Matrix8::identity(f);
  std::vector<Vector8> xs = candidate_points(f);
  std::vector<Vector8> out;
  Matrix8 m = h.mat();
  int guard = 0;
  while (!(m == id)) {
    if (++guard > 24)
      throw Error::math("Internal", "reflection factorization did not settle");
    Matrix8 fm = m - id;
    // Anisotropic u = (h - 1)x drops rank(h - 1); prefer one that does
    // not leave the next image totally isotropic.
    std::optional<Vector8> fallback;
    std::optional<Vector8> good;
    for (const Vector8& x : xs) {
      Vector8 u = fm.apply(x);
      if (u.is_zero() || q.eval(u).is_zero()) continue;
      Matrix8 next = reflect(q, u).mat() * m;
      ImageState st = image_state(q, next);
      if (st.rank == 0 || !st.totally_isotropic) {
        good = u;
        break;
      }
      if (!fallback) fallback = u;
    }
    if (good || fallback) {
      Vector8 u = good ? *good : *fallback;
      out.push_back(u);
      m = reflect(q, u).mat() * m;
      continue;
    }
    // im(h - 1) is totally isotropic: detour through one extra
    // reflection chosen so the image stops being totally isotropic.
    bool placed = false;
    for (int i = 0; i < 8 && !placed; ++i) {
      Vector8 t = Vector8::unit(f, i);
      if (q.eval(t).is_zero()) continue;
      Matrix8 next = reflect(q, t).mat() * m;
      if (!image_state(q, next).totally_isotropic) {
        out.push_back(t);
        m = next;
        placed = true;
      }
    }
    if (!placed)
      throw Error::math("Internal", "no usable detour reflection");
  }
  if (out.size() > 8)
    throw Error::math("Internal", "factorization exceeded eight reflections");
  // Recomposition check: left-to-right product equals h.
  Matrix8 prod = id;
  for (const Vector8& u : out) prod = prod * reflect(q, u).mat();
  if (!(prod == h.mat()))
    throw Error::math("Internal", "reflections do not recompose");
  return out;
}

Vector8 random_anisotropic(const QuadraticForm& q, Rng& rng) {
  const Field f = q.field();
  for (;;) {
    Vector8 v;
    for (int i = 0; i < 8; ++i) v.c[i] = rng.scalar(f);
    if (!q.eval(v).is_zero()) return v;
  }
}

Similarity random_reflection_product(const QuadraticForm& q, int k, Rng& rng) {
  Similarity s = Similarity::from_matrix(q, Matrix8::identity(q.field()));
  for (int i = 0; i < k; ++i)
    s = s.compose(reflect(q, random_anisotropic(q, rng)));
  return s;
}

}  // namespace comptri
