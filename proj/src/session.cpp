#include "session.hpp"

#include "errors.hpp"

namespace comptri {

namespace {

AlgebraK opposite(const AlgebraK& a) {
  AlgebraK op;
  op.form = a.form;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      op.basis_product(i, j) = a.basis_product(j, i);
  return op;
}

}  // namespace

Session Session::create(const Field& field, std::array<Scalar, 3> pfister,
                        uint64_t seed) {
  for (const Scalar& s : pfister)
    if (s.field() != field)
      throw Error::usage("Pfister parameters not in the session field");
  CompositionAlgebra h0 = cayley_dickson(pfister[0], pfister[1], pfister[2]);
  Matrix8 inv = canonical_involution(h0);
  CompositionAlgebra s0 = para_hurwitz(h0);
  Unitalization pu = unitalize(s0);
  // The para-Hurwitz of a Cayley-Dickson model unitalizes back to it.
  if (!(pu.hurwitz == h0) || !(pu.f == inv) || !(pu.g == inv))
    throw Error::math("Internal", "session base did not unitalize to H0");

  const QuadraticForm& q = h0.form();
  Similarity sigma0 = reflect(q, Vector8::unit(field, 0));

  // Swapped components of sigma0 with respect to S0, bootstrapped
  // through the opposite Hurwitz product: sigma0(uv) = Q(v) P(u) in H0
  // becomes a standard component problem for the opposite algebra, and
  // conjugating by the involution moves it to S0.
  TrialityPair qp = solve_components(opposite(h0.alg()), h0, sigma0);
  Matrix8 m1 = inv * qp.h1.mat() * inv;
  Matrix8 m2 = inv * qp.h2.mat() * inv;
  TrialityPair swap0{Similarity::from_matrix(q, m1),
                     Similarity::from_matrix(q, m2)};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(sigma0.mat().apply(s0.alg().basis_product(i, j)) ==
            s0.mul(swap0.h1.mat().col(j), swap0.h2.mat().col(i))))
        throw Error::math("Internal", "reference swap data failed to verify");

  return Session(field, std::move(pfister), seed, std::move(h0), std::move(s0),
                 std::move(inv), std::move(pu), std::move(sigma0),
                 std::move(swap0));
}

}  // namespace comptri
