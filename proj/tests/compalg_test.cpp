#include <doctest.h>

#include "compalg.hpp"
#include "rng.hpp"
#include "simgroup.hpp"

using namespace comptri;

namespace {

CompositionAlgebra cd_for(const Field& f, long a, long b, long c) {
  return cayley_dickson(Scalar::of_int(f, a), Scalar::of_int(f, b),
                        Scalar::of_int(f, c));
}

}  // namespace

TEST_CASE("cayley-dickson basics") {
  Field f3 = Field::fp(3);
  CompositionAlgebra h = cd_for(f3, 1, 1, 1);
  Vector8 e = *h.unit();
  CHECK(h.mul(e, e) == e);
  // e2^2 = a e with a = 1 (doubling convention pinned by hand expansion).
  Vector8 e2 = Vector8::unit(f3, 1);
  CHECK(h.mul(e2, e2) == e);
  CHECK(h.multiplier().is_one());

  // Norm multiplicativity on random pairs over Q with parameters 1,2,3.
  Field fq = Field::rationals();
  CompositionAlgebra hq = cd_for(fq, 1, 2, 3);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    Vector8 x, y;
    for (int i = 0; i < 8; ++i) {
      x.c[i] = rng.scalar(fq);
      y.c[i] = rng.scalar(fq);
    }
    CHECK(hq.form().eval(hq.mul(x, y)) ==
          hq.form().eval(x) * hq.form().eval(y));
  }
}

TEST_CASE("structure constants are pinned against convention drift") {
  // Quaternion block of CD(1,1,1) over Q under
  // (x,y)(u,v) = (xu + d conj(v) y, v x + y conj(u)).
  Field fq = Field::rationals();
  CompositionAlgebra h = cd_for(fq, 1, 1, 1);
  auto u = [&](int i) { return Vector8::unit(fq, i); };
  CHECK(h.mul(u(1), u(2)) == u(3));
  CHECK(h.mul(u(2), u(1)) == -u(3));
  CHECK(h.mul(u(2), u(2)) == u(0));
  CHECK(h.mul(u(3), u(3)) == -u(0));
  CHECK(h.mul(u(4), u(4)) == u(0));
  CHECK(h.mul(u(1), u(4)) == u(5));
}

TEST_CASE("check_composition certifies and rejects") {
  Field f5 = Field::fp(5);
  CompositionAlgebra h = cd_for(f5, 1, 1, 1);
  CHECK(check_composition(h.alg()).is_one());

  // One perturbed structure constant breaks the grid.
  AlgebraK bad = h.alg();
  bad.basis_product(2, 5).c[0] += Scalar::one(f5);
  CHECK_THROWS_WITH_AS((void)check_composition(bad),
                       doctest::Contains("NotComposition"), Error);

  // The zero algebra reads off multiplier 0, which is not in k*.
  AlgebraK zero;
  zero.form = h.alg().form;
  for (int i = 0; i < 64; ++i) zero.gamma[i] = Vector8::zero(f5);
  CHECK_THROWS_WITH_AS((void)check_composition(zero),
                       doctest::Contains("NotComposition"), Error);
}

TEST_CASE("zorn split octonions") {
  for (uint32_t p : {3u, 5u}) {
    Field f = Field::fp(p);
    CompositionAlgebra z = zorn_split(f);
    CHECK(z.multiplier().is_one());
    CHECK(z.unit());
    CHECK(*z.unit() == Vector8::unit(f, 0));
    // Lives on the session form <<1,1,1>>.
    CHECK(z.form() == QuadraticForm::pfister3(Scalar::one(f), Scalar::one(f),
                                              Scalar::one(f)));
    // Genuinely split: a different multiplication table than CD(1,1,1).
    CHECK(!(z.alg() == cd_for(f, 1, 1, 1).alg()));
  }
}

TEST_CASE("isotopes") {
  Field f5 = Field::fp(5);
  CompositionAlgebra h = cd_for(f5, 1, 1, 1);
  Matrix8 id = Matrix8::identity(f5);
  CHECK(isotope(h.alg(), id, id) == h.alg());

  // Orthogonal isotopes stay composition algebras, 50 per field.
  for (uint32_t p : {3u, 5u}) {
    Field fp = Field::fp(p);
    CompositionAlgebra hp = cd_for(fp, 1, 1, 1);
    Rng rng(21 + p);
    for (int t = 0; t < 50; ++t) {
      Similarity f =
          random_reflection_product(hp.form(), 1 + rng.below(4), rng);
      Similarity g =
          random_reflection_product(hp.form(), 1 + rng.below(4), rng);
      CHECK(check_composition(isotope(hp.alg(), f.mat(), g.mat())).is_one());
    }
  }

  // g outside GO(n): multiplicativity fails on the grid.
  Matrix8 shear = id;
  shear.at(0, 1) = Scalar::one(f5);
  CHECK_THROWS_AS((void)check_composition(isotope(h.alg(), id, shear)), Error);
  CHECK_THROWS_AS((void)isotope(h.alg(), Matrix8::zero(f5), id), Error);
}

TEST_CASE("scalar multiples") {
  Field f5 = Field::fp(5);
  CompositionAlgebra c = cd_for(f5, 1, 1, 1);
  CHECK(scalar_multiple(c.alg(), Scalar::one(f5)) == c.alg());
  // lambda = -1 keeps the multiplier at 1; lambda = 2 scales it to 4.
  CHECK(check_composition(scalar_multiple(c.alg(), -Scalar::one(f5))).is_one());
  CHECK(check_composition(scalar_multiple(c.alg(), Scalar::of_int(f5, 2))) ==
        Scalar::of_int(f5, 4));
  CHECK_THROWS_AS((void)scalar_multiple(c.alg(), Scalar::zero(f5)), Error);
  // lambda Id : lambda A -> A is an isomorphism, for a sample of lambda.
  for (long lam : {2, 3, 4}) {
    Scalar l = Scalar::of_int(f5, lam);
    AlgebraK la = scalar_multiple(c.alg(), l);
    Matrix8 m = Matrix8::identity(f5) * l;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        CHECK(m.apply(la.basis_product(i, j)) == c.mul(m.col(i), m.col(j)));
  }
}

TEST_CASE("unit elements") {
  Field f3 = Field::fp(3);
  CompositionAlgebra h = cd_for(f3, 1, 1, 1);
  CHECK(*unit_element(h.alg()) == Vector8::unit(f3, 0));
  CompositionAlgebra s = para_hurwitz(h);
  CHECK(!unit_element(s.alg()));
  // Unitalizing the para-Hurwitz recovers a unit.
  Unitalization u = unitalize(s);
  CHECK(*unit_element(u.hurwitz.alg()) == u.e);
}

TEST_CASE("unitalize on an already unital algebra is trivial") {
  Field f5 = Field::fp(5);
  CompositionAlgebra h = cd_for(f5, 1, 2, 3);
  Unitalization u = unitalize(h);
  CHECK(u.hurwitz == h);
  CHECK(u.f == Matrix8::identity(f5));
  CHECK(u.g == Matrix8::identity(f5));
  CHECK(u.e == *h.unit());
}

TEST_CASE("unitalize the para-Hurwitz recovers (H, i, i)") {
  Field f3 = Field::fp(3);
  CompositionAlgebra h = cd_for(f3, 1, 1, 1);
  Matrix8 i = canonical_involution(h);
  CompositionAlgebra s = para_hurwitz(h);
  Unitalization u = unitalize(s);
  CHECK(u.hurwitz == h);
  CHECK(u.f == i);
  CHECK(u.g == i);
  CHECK(u.e == *h.unit());
}

TEST_CASE("unitalize random orthogonal isotopes (round trip is internal)") {
  Field f3 = Field::fp(3);
  CompositionAlgebra h = cd_for(f3, 1, 1, 1);
  const QuadraticForm& q = h.form();
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    Similarity f = random_reflection_product(q, 1 + rng.below(4), rng);
    Similarity g = random_reflection_product(q, 1 + rng.below(4), rng);
    CompositionAlgebra c =
        CompositionAlgebra::certify(isotope(h.alg(), f.mat(), g.mat()));
    // unitalize re-expands H_{f,g} and compares against C exactly; a
    // normal return certifies the multiply-back identity.
    Unitalization u = unitalize(c);
    CHECK(u.hurwitz.unit());
    CHECK(similarity_multiplier(q, u.f).is_one());
    CHECK(similarity_multiplier(q, u.g).is_one());
  }
}

TEST_CASE("canonical involution") {
  Field f5 = Field::fp(5);
  CompositionAlgebra h = cd_for(f5, 1, 2, 3);
  Matrix8 i = canonical_involution(h);
  const QuadraticForm& q = h.form();
  Vector8 e = *h.unit();
  CHECK(i.apply(e) == e);
  CHECK(i * i == Matrix8::identity(f5));
  CHECK(similarity_multiplier(q, i).is_one());
  CHECK(det(i) == -Scalar::one(f5));
  for (int k = 1; k < 8; ++k)
    CHECK(i.apply(Vector8::unit(f5, k)) == -Vector8::unit(f5, k));
  // i is an anti-automorphism of H.
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      CHECK(i.apply(h.alg().basis_product(a, b)) == h.mul(i.col(b), i.col(a)));
  CompositionAlgebra s = para_hurwitz(h);
  CHECK_THROWS_AS((void)canonical_involution(s), Error);
}

TEST_CASE("para-Hurwitz properties") {
  Field f3 = Field::fp(3);
  CompositionAlgebra h = cd_for(f3, 1, 1, 1);
  CompositionAlgebra s = para_hurwitz(h);
  Vector8 e = *h.unit();
  CHECK(s.mul(e, e) == e);  // e . e = i(e) i(e) = e
  CHECK(is_symmetric(s.alg()));
  CHECK(!s.unit());
  CHECK(s.multiplier().is_one());
  // An eight-dimensional Hurwitz algebra is not symmetric.
  CHECK(!is_symmetric(h.alg()));
}

TEST_CASE("symmetric decomposition") {
  Field f5 = Field::fp(5);
  CompositionAlgebra h = cd_for(f5, 1, 1, 1);
  Matrix8 i = canonical_involution(h);
  // A Hurwitz algebra decomposes as (H_{i,i}, i, i).
  SymmetricDecomposition sd = symmetric_decomposition(h);
  CHECK(sd.sym.alg() == para_hurwitz(h).alg());
  CHECK(sd.f == i);
  CHECK(sd.g == i);
  // The para-Hurwitz itself comes back as (S, Id, Id).
  CompositionAlgebra s = para_hurwitz(h);
  SymmetricDecomposition sd2 = symmetric_decomposition(s);
  CHECK(sd2.sym.alg() == s.alg());
  CHECK(sd2.f == Matrix8::identity(f5));
  CHECK(sd2.g == Matrix8::identity(f5));

  const QuadraticForm& q = h.form();
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    Similarity f = random_reflection_product(q, 1 + rng.below(3), rng);
    Similarity g = random_reflection_product(q, 1 + rng.below(3), rng);
    CompositionAlgebra c =
        CompositionAlgebra::certify(isotope(h.alg(), f.mat(), g.mat()));
    SymmetricDecomposition d = symmetric_decomposition(c);
    CHECK(is_symmetric(d.sym.alg()));
    CHECK(similarity_multiplier(q, d.f).is_one());
    CHECK(similarity_multiplier(q, d.g).is_one());
  }
}

TEST_CASE("transport_isotope") {
  Field f3 = Field::fp(3);
  CompositionAlgebra h = cd_for(f3, 1, 1, 1);
  Matrix8 id = Matrix8::identity(f3);
  Rng rng(77);
  Similarity f = random_reflection_product(h.form(), 2, rng);
  Similarity g = random_reflection_product(h.form(), 2, rng);
  // h = Id, A = B: returns A_{f,g}.
  CHECK(transport_isotope(id, h.alg(), f.mat(), g.mat(), h.alg()) ==
        isotope(h.alg(), f.mat(), g.mat()));
  // f = g = Id gives B itself.
  CHECK(transport_isotope(id, h.alg(), id, id, h.alg()) == h.alg());
  // A non-homomorphism is rejected.
  CHECK_THROWS_WITH_AS(
      (void)transport_isotope(f.mat(), h.alg(), id, id, h.alg()),
      doctest::Contains("NotAHomomorphism"), Error);
}

TEST_CASE("normalization chain") {
  Field f5 = Field::fp(5);
  CompositionAlgebra h = cd_for(f5, 1, 1, 1);
  const QuadraticForm& q = h.form();
  Matrix8 id = Matrix8::identity(f5);

  SUBCASE("trivial inputs give the para-Hurwitz") {
    NormalizationChain nc = normalization_chain(h, id, id);
    CHECK(nc.lambda.is_one());
    CHECK(nc.eprime == *h.unit());
    CHECK(nc.hprime.alg() == h.alg());
    CHECK(nc.iprime == canonical_involution(h));
    CHECK(nc.sym.alg() == para_hurwitz(h).alg());
    CHECK(nc.f == id);
    CHECK(nc.g == id);
  }

  SUBCASE("isometry inputs keep multiplier 1") {
    Rng rng(12);
    for (int t = 0; t < 5; ++t) {
      Similarity F = random_reflection_product(q, 1 + rng.below(4), rng);
      Similarity G = random_reflection_product(q, 1 + rng.below(4), rng);
      NormalizationChain nc = normalization_chain(h, F.mat(), G.mat());
      CHECK(nc.lambda.is_one());
      CHECK(is_symmetric(nc.sym.alg()));
      CHECK(nc.sym.multiplier().is_one());
      CHECK(similarity_multiplier(q, nc.f).is_one());
      CHECK(similarity_multiplier(q, nc.g).is_one());
    }
  }

  SUBCASE("non-square multiplier surfaces NotSquare") {
    // L_c with n(c) a non-square: mu(L_c) = n(c).
    Scalar two = Scalar::of_int(f5, 2);  // non-square mod 5
    Vector8 c = find_norm_vector(q, &two);
    Matrix8 lc = h.lmul(c);
    CHECK(similarity_multiplier(q, lc) == two);
    CHECK_THROWS_WITH_AS((void)normalization_chain(h, lc, id),
                         doctest::Contains("NotSquare"), Error);
  }

  SUBCASE("square multiplier similarity runs the full chain") {
    Scalar four = Scalar::of_int(f5, 4);
    Vector8 c = find_norm_vector(q, &four);
    Matrix8 lc = h.lmul(c);
    NormalizationChain nc = normalization_chain(h, lc, id);
    CHECK(nc.lambda == four);
    CHECK(nc.hprime.multiplier() == four);
    CHECK(*nc.hprime.unit() == nc.eprime);
    CHECK(is_symmetric(nc.sprime.alg()));
    CHECK(nc.sprime.multiplier() == four);
    CHECK(nc.sym.multiplier().is_one());
    CHECK(is_symmetric(nc.sym.alg()));
  }
}
