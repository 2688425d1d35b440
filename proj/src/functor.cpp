#include "functor.hpp"

#include <cassert>
#include <thread>

#include "errors.hpp"
#include "session.hpp"

namespace comptri {

TrialitarianPairRepr functor_image(const Session& s,
                                   const CompositionAlgebra& c) {
  auto [a1, a2] = marked_auto_of(s, c);
  TrialitarianPairRepr repr{std::move(a1), std::move(a2)};
  if (!repr.trialitarian())
    throw Error::math("Internal", "functor image is not trialitarian");
  return repr;
}

bool symmetric_criterion(const CompositionAlgebra& s, const Matrix8& f,
                         const Matrix8& g) {
  const QuadraticForm& q = *s.alg().form;
  Similarity sf = Similarity::from_matrix(q, f);
  Similarity sg = Similarity::from_matrix(q, g);
  if (!sf.mu().is_one() || !sg.mu().is_one())
    throw Error::math("NotAnIsometry", "criterion needs f, g in O(n)");
  if (sf.sign() != 1 || sg.sign() != 1) return false;
  ProjSimilarity pf = ProjSimilarity::of(sf);
  ProjSimilarity pg = ProjSimilarity::of(sg);
  ProjSimilarity r1 = rho(s, 1, pf);
  ProjSimilarity r2 = rho(s, 1, r1);
  bool cocycle = r2.compose(r1).compose(pf).is_identity();
  bool paired = r2.inverse() == pg;
  return cocycle && paired;
}

DoubleSign double_sign(const CompositionAlgebra& c) {
  if (!c.multiplier().is_one())
    throw Error::math("NotNormalized", "double sign needs multiplier 1");
  const QuadraticForm& q = c.form();
  const Field f = c.field();
  std::vector<Vector8> anis;
  for (int i = 0; i < 8 && anis.size() < 6; ++i) {
    Vector8 v = Vector8::unit(f, i);
    if (!q.eval(v).is_zero()) anis.push_back(v);
  }
  for (int i = 0; i < 8 && anis.size() < 6; ++i)
    for (int j = i + 1; j < 8 && anis.size() < 6; ++j) {
      Vector8 v = Vector8::unit(f, i) + Vector8::unit(f, j);
      if (!q.eval(v).is_zero()) anis.push_back(v);
    }
  if (anis.empty())
    throw Error::math("Internal", "no anisotropic basis combination");
  std::optional<DoubleSign> ds;
  for (const Vector8& v : anis) {
    Similarity l = Similarity::from_matrix(q, c.lmul(v));
    Similarity r = Similarity::from_matrix(q, c.rmul(v));
    DoubleSign cur{l.sign(), r.sign()};
    if (!ds)
      ds = cur;
    else if (*ds != cur)
      throw Error::math("Internal", "double sign depends on the element");
  }
  return *ds;
}

DoubleSign double_sign_via_orders(const Session& s,
                                  const CompositionAlgebra& c) {
  auto [a1, a2] = marked_auto_of(s, c);
  int o1 = s3_order(a1);
  int o2 = s3_order(a2);
  auto sgn = [](int o) { return o % 2 == 0 ? 1 : -1; };
  return DoubleSign{sgn(o2), sgn(o1)};
}

H0Presentation h0_presentation(const Session& s, const CompositionAlgebra& c) {
  Unitalization u = unitalize(c);
  if (u.hurwitz == s.hurwitz())
    return H0Presentation{u.f, u.g, Matrix8::identity(c.field())};
  Matrix8 phi = hurwitz_align(u.hurwitz, s.hurwitz());
  auto phinv = inverse(phi);
  if (!phinv) throw Error::math("Internal", "alignment is singular");
  // c = H'_{f,g} and phi: H' -> H0, so phi carries c onto
  // H0_{phi f phi^{-1}, phi g phi^{-1}}.
  Matrix8 f = phi * u.f * *phinv;
  Matrix8 g = phi * u.g * *phinv;
  AlgebraK target = isotope(s.hurwitz().alg(), f, g);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(phi.apply(c.alg().basis_product(i, j)) ==
            target.mul(phi.col(i), phi.col(j))))
        throw Error::math("Internal", "presentation transport failed");
  return H0Presentation{std::move(f), std::move(g), std::move(phi)};
}

namespace {

bool direct_homomorphism(const CompositionAlgebra& c,
                         const CompositionAlgebra& d, const Matrix8& h) {
  if (!mat_solve(h).invertible) return false;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(h.apply(c.alg().basis_product(i, j)) ==
            d.mul(h.col(i), h.col(j))))
        return false;
  return true;
}

}  // namespace

bool iso_check(const Session& s, const CompositionAlgebra& c,
               const CompositionAlgebra& d, const Matrix8& h) {
  if (!(*c.alg().form == *d.alg().form))
    throw Error::usage("isomorphism check across different forms");
  const QuadraticForm& q = *c.alg().form;
  bool direct = direct_homomorphism(c, d, h);
  if (direct) {
    // Morphisms of composition algebras are proper isometries.
    Similarity sim = Similarity::from_matrix(q, h);
    if (!sim.mu().is_one() || sim.sign() != 1)
      throw Error::math("Internal", "isomorphism outside O+(n)");
  }

  H0Presentation pc = h0_presentation(s, c);
  H0Presentation pd = h0_presentation(s, d);
  auto pcinv = inverse(pc.phi);
  if (!pcinv) throw Error::math("Internal", "presentation map is singular");
  Matrix8 ht = pd.phi * h * *pcinv;
  bool triality_route = false;
  try {
    Similarity sim = Similarity::from_matrix(q, ht);
    if (sim.sign() == 1 && sim.mu().is_one()) {
      TrialityPair pair = triality_components(s.hurwitz(), sim);
      ProjSimilarity ph = ProjSimilarity::of(sim);
      ProjSimilarity lhs_f = ProjSimilarity::of(
          Similarity::from_matrix(q, pd.f));
      ProjSimilarity lhs_g = ProjSimilarity::of(
          Similarity::from_matrix(q, pd.g));
      ProjSimilarity rhs_f = ProjSimilarity::of(pair.h1)
                                 .compose(ProjSimilarity::of(
                                     Similarity::from_matrix(q, pc.f)))
                                 .compose(ph.inverse());
      ProjSimilarity rhs_g = ProjSimilarity::of(pair.h2)
                                 .compose(ProjSimilarity::of(
                                     Similarity::from_matrix(q, pc.g)))
                                 .compose(ph.inverse());
      triality_route = (lhs_f == rhs_f) && (lhs_g == rhs_g);
    }
  } catch (const Error& e) {
    if (e.kind() != "NotASimilarity" && e.kind() != "NoSolution") throw;
  }

  // The projective criterion sees h only up to scalar; resolve the sign
  // before comparing verdicts.
  bool direct_up_to_sign = direct || direct_homomorphism(c, d, -h);
  if (triality_route != direct_up_to_sign)
    throw Error::math("Internal",
                      "triality and basis-product verdicts disagree");
  return direct;
}

IsoSearchOutcome iso_search(const Session& s, const CompositionAlgebra& c,
                            const CompositionAlgebra& d, long budget) {
  if (double_sign(c) != double_sign(d))
    return {IsoSearchOutcome::NotIsomorphicByInvariant, std::nullopt, 0};
  if (is_symmetric(c.alg()) != is_symmetric(d.alg()))
    return {IsoSearchOutcome::NotIsomorphicByInvariant, std::nullopt, 0};
  const QuadraticForm& q = *c.alg().form;
  Matrix8 id = Matrix8::identity(c.field());
  if (direct_homomorphism(c, d, id)) {
    if (!iso_check(s, c, d, id))
      throw Error::math("Internal", "identity witness failed verification");
    return {IsoSearchOutcome::Found, id, 1};
  }
  Rng rng = s.rng(0x15055EA6C4ULL);
  for (long t = 0; t < budget; ++t) {
    int k = 2 + 2 * static_cast<int>(t % 3);
    Similarity h = random_reflection_product(q, k, rng);
    if (direct_homomorphism(c, d, h.mat())) {
      if (!iso_check(s, c, d, h.mat()))
        throw Error::math("Internal", "search witness failed verification");
      return {IsoSearchOutcome::Found, h.mat(), t + 2};
    }
  }
  return {IsoSearchOutcome::Unknown, std::nullopt, budget + 1};
}

namespace {

struct CensusDraw {
  Similarity f, g;
  CompositionAlgebra alg;
};

// Sample i depends only on (seed, i).
CensusDraw census_draw(const Session& s, uint64_t index) {
  Rng rng = s.rng(0xCE5505ULL + index * 2654435761ULL);
  const QuadraticForm& q = s.form();
  int kf = 1 + static_cast<int>(rng.below(4));
  int kg = 1 + static_cast<int>(rng.below(4));
  Similarity f = random_reflection_product(q, kf, rng);
  Similarity g = random_reflection_product(q, kg, rng);
  CompositionAlgebra c = CompositionAlgebra::certify(
      isotope(s.hurwitz().alg(), f.mat(), g.mat()));
  return CensusDraw{std::move(f), std::move(g), std::move(c)};
}

CensusRow census_sample(const Session& s, uint64_t index) {
  CensusDraw d = census_draw(s, index);
  CensusRow row{index, d.f.sign(), d.g.sign(), double_sign(d.alg),
                is_symmetric(d.alg.alg())};
  // Cross-check the symmetric verdict through the triality criterion:
  // H0_{f,g} = S0_{i f, i g}.
  bool crit = symmetric_criterion(s.para(), s.involution() * d.f.mat(),
                                  s.involution() * d.g.mat());
  if (crit != row.symmetric)
    throw Error::math("Internal", "census symmetric cross-check failed");
  return row;
}

}  // namespace

CensusReport census(const Session& s, uint64_t samples) {
  if (!s.field().is_fp())
    throw Error::usage("census needs a finite-field session");
  CensusReport rep;
  rep.samples = samples;
  rep.seed = s.seed();
  rep.rows.resize(samples, CensusRow{0, 0, 0, DoubleSign{0, 0}, false});

  // Fixed shard layout; rows depend only on (seed, index), so the
  // partition does not affect the output.
  const unsigned shards = 4;
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(shards);
  for (unsigned w = 0; w < shards; ++w) {
    workers.emplace_back([&, w]() {
      try {
        for (uint64_t i = w; i < samples; i += shards)
          rep.rows[i] = census_sample(s, i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (const CensusRow& r : rep.rows) {
    if (r.ds.left == 1 && r.ds.right == 1) ++rep.count_pp;
    if (r.ds.left == 1 && r.ds.right == -1) ++rep.count_pm;
    if (r.ds.left == -1 && r.ds.right == 1) ++rep.count_mp;
    if (r.ds.left == -1 && r.ds.right == -1) ++rep.count_mm;
    if (r.symmetric) ++rep.symmetric_count;
  }
  for (uint64_t i = 0; i + 1 < samples; i += 2) {
    CompositionAlgebra a = census_draw(s, i).alg;
    CompositionAlgebra b = census_draw(s, i + 1).alg;
    IsoSearchOutcome out = iso_search(s, a, b, 4);
    switch (out.kind) {
      case IsoSearchOutcome::Found: ++rep.iso_found; break;
      case IsoSearchOutcome::NotIsomorphicByInvariant:
        ++rep.iso_no_invariant;
        break;
      case IsoSearchOutcome::Unknown: ++rep.iso_unknown; break;
    }
  }
  return rep;
}

}  // namespace comptri
