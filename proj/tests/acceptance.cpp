// Acceptance suite: one criterion per line, PASS/FAIL, nonzero exit on
// any failure.  Everything runs at desk scale (F_3, F_5 and small
// rational parameters) against frozen anchors and independent oracles.
//
// Usage: acceptance [path-to-cli]   (the CLI path enables the
// determinism criterion; it is skipped with a FAIL if absent).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "clifford.hpp"
#include "f3_brute.hpp"
#include "functor.hpp"
#include "serial.hpp"
#include "session.hpp"

using namespace comptri;

namespace {

struct Check {
  int failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (first.empty()) first = what;
  }
};

Session session_fp(uint32_t p, uint64_t seed) {
  Field f = Field::fp(p);
  Scalar one = Scalar::one(f);
  return Session::create(f, {one, one, one}, seed);
}

CompositionAlgebra cd_int(const Field& f, long a, long b, long c) {
  return cayley_dickson(Scalar::of_int(f, a), Scalar::of_int(f, b),
                        Scalar::of_int(f, c));
}

// ---- criterion 1: composition certificates --------------------------

void criterion1(Check& ck) {
  const Field fields[] = {Field::fp(3), Field::fp(5), Field::rationals()};
  const long params[][3] = {{1, 1, 1}, {1, 2, 3}};
  for (const Field& f : fields)
    for (auto& p : params) {
      if (f.is_fp() && p[2] % f.p() == 0) {
        // (1,2,3) over F_3: the parameter c vanishes and the form
        // degenerates; the construction must refuse it.
        bool refused = false;
        try {
          (void)cd_int(f, p[0], p[1], p[2]);
        } catch (const Error& e) {
          refused = e.kind() == "ZeroParameter";
        }
        ck.expect(refused, "degenerate parameters are refused");
        continue;
      }
      CompositionAlgebra h = cd_int(f, p[0], p[1], p[2]);
      ck.expect(check_composition(h.alg()).is_one(),
                "multiplier 1 on " + f.str());
      ck.expect(h.unit() && *h.unit() == Vector8::unit(f, 0),
                "unit e1 on " + f.str());
    }
  // A deliberately perturbed table fails the grid.
  CompositionAlgebra h = cd_int(Field::fp(5), 1, 1, 1);
  AlgebraK bad = h.alg();
  bad.basis_product(3, 4).c[6] += Scalar::one(Field::fp(5));
  bool rejected = false;
  try {
    (void)check_composition(bad);
  } catch (const Error& e) {
    rejected = e.kind() == "NotComposition";
  }
  ck.expect(rejected, "perturbed table must fail");
}

// ---- criterion 2: triality solver soundness and uniqueness -----------

void criterion2(Check& ck) {
  for (uint32_t p : {3u, 5u}) {
    Session s = session_fp(p, 2026);
    const QuadraticForm& q = s.form();
    Rng rng = s.rng(2);
    for (int t = 0; t < 200; ++t) {
      int len = 2 + 2 * static_cast<int>(rng.below(4));  // 2..8, even
      Similarity h = random_reflection_product(q, len, rng);
      const CompositionAlgebra& c = (t % 2 == 0) ? s.para() : s.hurwitz();
      TrialityPair pair = triality_components(c, h);
      // Independent re-verification of all 64 identities.
      bool ids = true;
      for (int i = 0; i < 8 && ids; ++i)
        for (int j = 0; j < 8 && ids; ++j)
          ids = h.mat().apply(c.alg().basis_product(i, j)) ==
                c.mul(pair.h1.mat().col(i), pair.h2.mat().col(j));
      ck.expect(ids, "64 identities over fp:" + std::to_string(p));
      ck.expect(pair.h1.sign() == 1 && pair.h2.sign() == 1,
                "components proper");
      ck.expect(pair.h1.mu() * pair.h2.mu() == h.mu(),
                "multiplier composition");
      // Kernel dimension 1 is enforced by the solver (Degenerate
      // otherwise); reaching this point certifies it.
    }
    for (int t = 0; t < 200; ++t) {
      int len = 1 + 2 * static_cast<int>(rng.below(4));  // odd
      Similarity h = random_reflection_product(q, len, rng);
      bool nosol = false;
      try {
        (void)triality_components(s.para(), h);
      } catch (const Error& e) {
        nosol = e.kind() == "NoSolution";
      }
      ck.expect(nosol, "improper input must yield NoSolution");
    }
  }
  // 50 cross-checks against the exhaustive F_3 oracle.
  Session s3 = session_fp(3, 99);
  const CompositionAlgebra& h0 = s3.hurwitz();
  f3brute::Gamma3 g = f3brute::extract_gamma(h0.alg());
  f3brute::V8 e = f3brute::extract_vec(*h0.unit());
  Rng rng = s3.rng(3);
  for (int t = 0; t < 50; ++t) {
    Similarity h =
        random_reflection_product(s3.form(), 2 + 2 * (t % 4), rng);
    TrialityPair pair = solve_components(h0.alg(), h0, h);
    f3brute::V8 b_solver =
        f3brute::normalize3(f3brute::extract_vec(pair.h2.mat().apply(*h0.unit())));
    auto oracle = f3brute::oracle_candidates(g, e, f3brute::extract_mat(h.mat()));
    ck.expect(oracle.size() == 1, "oracle finds a unique projective b");
    ck.expect(!oracle.empty() && oracle[0] == b_solver,
              "oracle and solver agree");
  }
}

// ---- criterion 3: trialitarian structure -----------------------------

void criterion3(Check& ck) {
  Session s = session_fp(3, 31);
  Rng rng = s.rng(4);
  for (int t = 0; t < 50; ++t) {
    ProjSimilarity x =
        ProjSimilarity::of(random_reflection_product(s.form(), 2 + 2 * (t % 3), rng));
    ck.expect(rho_base(s, 1, rho_base(s, 1, rho_base(s, 1, x))) == x,
              "rho^3 = id");
    ck.expect(rho_base(s, 2, rho_base(s, 1, x)) == x, "rho1 rho2 = id");
  }
  for (int t = 0; t < 100; ++t) {
    ProjSimilarity x =
        ProjSimilarity::of(random_reflection_product(s.form(), 2, rng));
    ProjSimilarity y =
        ProjSimilarity::of(random_reflection_product(s.form(), 4, rng));
    ck.expect(rho_base(s, 1, x.compose(y)) ==
                  rho_base(s, 1, x).compose(rho_base(s, 1, y)),
              "homomorphism law");
  }
}

// ---- criterion 4: the twisting relation B -> B_{f,g} -----------------

void criterion4(Check& ck) {
  Session s = session_fp(3, 41);
  const QuadraticForm& q = s.form();
  Rng rng = s.rng(5);
  for (int t = 0; t < 50; ++t) {
    Similarity f = random_reflection_product(q, 1 + rng.below(4), rng);
    Similarity g = random_reflection_product(q, 1 + rng.below(4), rng);
    const CompositionAlgebra& b = (t % 2 == 0) ? s.hurwitz() : s.para();
    CompositionAlgebra c =
        CompositionAlgebra::certify(isotope(b.alg(), f.mat(), g.mat()));
    auto [b1, b2] = marked_auto_of(s, b);
    auto [c1, c2] = marked_auto_of(s, c);
    ProjSimilarity pf = ProjSimilarity::of(f);
    ProjSimilarity pg = ProjSimilarity::of(g);
    ck.expect(b1.coset == pf.compose(c1.coset), "rho1 relation");
    ck.expect(b2.coset == pg.compose(c2.coset), "rho2 relation");
    ck.expect(b1.r == c1.r && b2.r == c2.r, "twists are stable");
  }
}

// ---- criterion 5: functoriality, faithfulness, sign kernel -----------

void criterion5(Check& ck) {
  for (uint32_t p : {3u, 5u}) {
    Session s = session_fp(p, 51);
    const QuadraticForm& q = s.form();
    Rng rng = s.rng(6);
    int count = (p == 3) ? 50 : 10;
    for (int t = 0; t < count; ++t) {
      Similarity fm = random_reflection_product(q, 1 + rng.below(4), rng);
      Similarity gm = random_reflection_product(q, 1 + rng.below(4), rng);
      CompositionAlgebra c = CompositionAlgebra::certify(
          isotope(s.hurwitz().alg(), fm.mat(), gm.mat()));
      Unitalization u = unitalize(c);
      Matrix8 phi = hurwitz_align(u.hurwitz, s.hurwitz());
      CompositionAlgebra d = CompositionAlgebra::certify(transport_isotope(
          phi, u.hurwitz.alg(), u.f, u.g, s.hurwitz().alg()));
      // phi: c -> d is an isomorphism (transport re-verifies it).
      Similarity phis = Similarity::from_matrix(q, phi);
      auto [c1, c2] = marked_auto_of(s, c);
      auto [d1, d2] = marked_auto_of(s, d);
      ProjSimilarity hp = ProjSimilarity::of(phis);
      ck.expect(conj_marked(s, hp, c1) == d1, "functoriality r=1");
      ck.expect(conj_marked(s, hp, c2) == d2, "functoriality r=2");
      // Faithfulness: lambda phi is no longer an isomorphism.
      Matrix8 scaled = phi * Scalar::of_int(s.field(), 2);
      bool still_hom = true;
      for (int i = 0; i < 8 && still_hom; ++i)
        for (int j = 0; j < 8 && still_hom; ++j)
          still_hom = scaled.apply(c.alg().basis_product(i, j)) ==
                      d.mul(scaled.col(i), scaled.col(j));
      ck.expect(!still_hom, "scalar perturbation is rejected");
    }
    // F(C) = F(-C) while C != -C.
    Similarity fm = random_reflection_product(q, 2, rng);
    CompositionAlgebra c = CompositionAlgebra::certify(
        isotope(s.hurwitz().alg(), fm.mat(), Matrix8::identity(s.field())));
    CompositionAlgebra minus = CompositionAlgebra::certify(
        scalar_multiple(c.alg(), -Scalar::one(s.field())));
    ck.expect(!(c.alg() == minus.alg()), "C differs from -C");
    ck.expect(functor_image(s, c) == functor_image(s, minus),
              "images agree on C and -C");
  }
}

// ---- criterion 6: double sign ----------------------------------------

void criterion6(Check& ck) {
  for (uint32_t p : {3u, 5u}) {
    Session s = session_fp(p, 61);
    ck.expect(double_sign(s.hurwitz()) == DoubleSign{1, 1},
              "Hurwitz (+1,+1)");
    ck.expect(double_sign(s.para()) == DoubleSign{-1, -1},
              "para-Hurwitz (-1,-1)");
    Rng rng = s.rng(7);
    for (int t = 0; t < 100; ++t) {
      Similarity f =
          random_reflection_product(s.form(), 1 + rng.below(4), rng);
      Similarity g =
          random_reflection_product(s.form(), 1 + rng.below(4), rng);
      CompositionAlgebra c = CompositionAlgebra::certify(
          isotope(s.hurwitz().alg(), f.mat(), g.mat()));
      ck.expect(double_sign(c) == double_sign_via_orders(s, c),
                "direct route equals order route");
    }
  }
  Session s3 = session_fp(3, 7);
  CensusReport rep = census(s3, 200);
  ck.expect(rep.count_pp > 0 && rep.count_pm > 0 && rep.count_mp > 0 &&
                rep.count_mm > 0,
            "census populates all four classes");
}

// ---- criterion 7: symmetric criterion ---------------------------------

void criterion7(Check& ck) {
  Session s = session_fp(3, 71);
  const QuadraticForm& q = s.form();
  Matrix8 id = Matrix8::identity(s.field());
  ck.expect(symmetric_criterion(s.para(), id, id),
            "para-Hurwitz anchor is positive");
  ck.expect(!symmetric_criterion(s.para(), s.involution(), s.involution()),
            "Hurwitz anchor is negative");
  Rng rng = s.rng(8);
  for (int t = 0; t < 100; ++t) {
    Similarity f = random_reflection_product(q, 1 + rng.below(4), rng);
    Similarity g = random_reflection_product(q, 1 + rng.below(4), rng);
    bool crit = symmetric_criterion(s.para(), f.mat(), g.mat());
    bool direct = is_symmetric(isotope(s.para().alg(), f.mat(), g.mat()));
    ck.expect(crit == direct, "criterion equals direct verdict");
  }
}

// ---- criterion 8: properness cross-implementation ---------------------

void criterion8(Check& ck) {
  Session s = session_fp(5, 81);
  const QuadraticForm& q = s.form();
  CliffordAlgebra cl(q);
  Rng rng = s.rng(9);
  for (int t = 0; t < 50; ++t) {
    Similarity h = random_reflection_product(q, 1 + rng.below(5), rng);
    if (t % 2 == 0) {
      // Left multiplications realize non-square multipliers.
      Vector8 c = random_anisotropic(q, rng);
      h = h.compose(Similarity::from_matrix(q, s.hurwitz().lmul(c)));
    }
    ck.expect(cl.properness_via_centre(h) == h.sign(),
              "clifford centre equals determinant sign");
  }
}

// ---- criterion 9: isomorphism criterion -------------------------------

void criterion9(Check& ck) {
  Session s = session_fp(3, 91);
  const QuadraticForm& q = s.form();
  Rng rng = s.rng(10);
  int iso_cases = 0, non_cases = 0;
  while (iso_cases + non_cases < 100) {
    Similarity fm = random_reflection_product(q, 1 + rng.below(4), rng);
    Similarity gm = random_reflection_product(q, 1 + rng.below(4), rng);
    CompositionAlgebra c = CompositionAlgebra::certify(
        isotope(s.hurwitz().alg(), fm.mat(), gm.mat()));
    if (iso_cases < 50) {
      // Constructed isomorphic pair; iso_check internally asserts the
      // triality route agrees with the direct route.
      Unitalization u = unitalize(c);
      Matrix8 phi = hurwitz_align(u.hurwitz, s.hurwitz());
      CompositionAlgebra d = CompositionAlgebra::certify(transport_isotope(
          phi, u.hurwitz.alg(), u.f, u.g, s.hurwitz().alg()));
      ck.expect(iso_check(s, c, d, phi), "constructed isomorphism verifies");
      ++iso_cases;
    } else {
      // Invariant-distinct pair: flip one slot's parity.
      Similarity extra = random_reflection_product(q, 1, rng);
      CompositionAlgebra d = CompositionAlgebra::certify(isotope(
          s.hurwitz().alg(), fm.mat(), (gm.compose(extra)).mat()));
      if (double_sign(c) == double_sign(d)) continue;
      Similarity h = random_reflection_product(q, 2 * (1 + rng.below(3)), rng);
      ck.expect(!iso_check(s, c, d, h.mat()),
                "invariant-distinct pair never verifies");
      ++non_cases;
    }
  }
}

// ---- criterion 10: normalization pipeline ------------------------------

void criterion10(Check& ck) {
  Session s = session_fp(5, 101);
  const QuadraticForm& q = s.form();
  const CompositionAlgebra& h0 = s.hurwitz();
  Rng rng = s.rng(11);
  auto similitude = [&](bool square_class) {
    // Reflection word times a left multiplication; n(c) controls the
    // multiplier's square class.
    for (;;) {
      Vector8 c = random_anisotropic(q, rng);
      bool sq = q.eval(c).is_square();
      if (sq != square_class) continue;
      Similarity l = Similarity::from_matrix(q, h0.lmul(c));
      return random_reflection_product(q, rng.below(4), rng).compose(l);
    }
  };
  int done = 0;
  while (done < 20) {
    Similarity f = similitude(rng.below(2) == 0);
    Similarity g = similitude((f.mu().is_square()) ? true : false);
    // lambda = n(a) n(b) = mu(F)^{-1} mu(G)^{-1}; make it a square.
    if (!(f.mu() * g.mu()).is_square()) continue;
    NormalizationChain nc = normalization_chain(h0, f.mat(), g.mat());
    ck.expect(nc.hprime.unit() && *nc.hprime.unit() == nc.eprime,
              "H' unit is (ab)^{-1}");
    ck.expect(nc.hprime.multiplier() == nc.lambda, "H' multiplier is n(ab)");
    ck.expect(similarity_multiplier(q, nc.iprime).is_one(),
              "i' is an isometry");
    ck.expect(is_symmetric(nc.sprime.alg()) &&
                  nc.sprime.multiplier() == nc.lambda,
              "S' symmetric generalized");
    ck.expect(nc.sym.multiplier().is_one() && is_symmetric(nc.sym.alg()),
              "T symmetric with multiplier 1");
    // Conjugacy display as marked equality; the normalizing
    // isomorphism T -> S' is scalar, so the conjugating class is
    // trivial and conj_marked by it is the identity.
    auto [t1, t2] = marked_auto_of(s, nc.sym);
    ProjSimilarity trivial = ProjSimilarity::of(
        Similarity::from_matrix(q, Matrix8::identity(s.field())));
    MarkedAuto lhs1{1, ProjSimilarity::of(f)};
    MarkedAuto lhs2{2, ProjSimilarity::of(g)};
    MarkedAuto rhs1{1, ProjSimilarity::of(Similarity::from_matrix(q, nc.f))
                           .compose(t1.coset)};
    MarkedAuto rhs2{2, ProjSimilarity::of(Similarity::from_matrix(q, nc.g))
                           .compose(t2.coset)};
    ck.expect(conj_marked(s, trivial, lhs1) == rhs1,
              "conjugacy display r=1");
    ck.expect(conj_marked(s, trivial, lhs2) == rhs2,
              "conjugacy display r=2");
    ++done;
  }
  // Non-square lambda surfaces NotSquare.
  int rejected = 0;
  while (rejected < 3) {
    Similarity f = similitude(false);
    Similarity g = similitude(true);
    if ((f.mu() * g.mu()).is_square()) continue;
    try {
      (void)normalization_chain(h0, f.mat(), g.mat());
    } catch (const Error& e) {
      if (e.kind() == "NotSquare") ++rejected;
    }
  }
  ck.expect(rejected == 3, "non-square multiplier raises NotSquare");
}

// ---- criterion 11: determinism of the CLI ------------------------------

std::string run_cli(const std::string& cli, const std::string& args,
                    const std::string& out_file) {
  std::string cmd = cli + " " + args + " --out " + out_file + " 2>/dev/null";
  if (std::system(cmd.c_str()) != 0) return "<nonzero exit>";
  std::ifstream in(out_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion11(Check& ck, const std::string& cli) {
  if (cli.empty()) {
    ck.expect(false, "no CLI path supplied");
    return;
  }
  std::string a = run_cli(cli, "selftest --field fp:3 --seed 7", "/tmp/comptri_a1.json");
  std::string b = run_cli(cli, "selftest --field fp:3 --seed 7", "/tmp/comptri_a2.json");
  ck.expect(!a.empty() && a != "<nonzero exit>" && a == b,
            "selftest is bit-identical");
  std::string c = run_cli(cli, "census --samples 200 --seed 7 --field fp:3",
                          "/tmp/comptri_c1.json");
  std::string d = run_cli(cli, "census --samples 200 --seed 7 --field fp:3",
                          "/tmp/comptri_c2.json");
  ck.expect(!c.empty() && c != "<nonzero exit>" && c == d,
            "census is bit-identical");
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  struct Entry {
    const char* name;
    std::function<void(Check&)> fn;
  };
  std::vector<Entry> entries = {
      {"01 composition certificates", criterion1},
      {"02 triality solver soundness + oracle", criterion2},
      {"03 trialitarian structure of rho", criterion3},
      {"04 isotope twisting relation", criterion4},
      {"05 functoriality and sign kernel", criterion5},
      {"06 double sign, both routes + census", criterion6},
      {"07 symmetric criterion", criterion7},
      {"08 properness cross-implementation", criterion8},
      {"09 isomorphism criterion, both routes", criterion9},
      {"10 normalization pipeline", criterion10},
      {"11 determinism", [&](Check& c) { criterion11(c, cli); }},
  };
  int failed = 0;
  for (auto& e : entries) {
    Check ck;
    try {
      e.fn(ck);
    } catch (const std::exception& ex) {
      ck.expect(false, std::string("exception: ") + ex.what());
    }
    if (ck.failures == 0) {
      std::printf("PASS  %s\n", e.name);
    } else {
      ++failed;
      std::printf("FAIL  %s  (%d checks; first: %s)\n", e.name, ck.failures,
                  ck.first.c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
