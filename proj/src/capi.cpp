#include "comptri/comptri.h"

#include <cstring>
#include <string>

#include "clifford.hpp"
#include "errors.hpp"
#include "serial.hpp"
#include "session.hpp"

using namespace comptri;

struct comptri_session {
  Session session;
};

struct comptri_algebra {
  const comptri_session* owner;
  CompositionAlgebra value;
  Json construction;  // null when unknown
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
comptri_status guarded(Fn&& fn) {
  try {
    fn();
    return COMPTRI_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    switch (e.status()) {
      case Status::Usage: return COMPTRI_ERR_USAGE;
      case Status::Budget: return COMPTRI_ERR_BUDGET;
      default: return COMPTRI_ERR_MATH;
    }
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return COMPTRI_ERR_MATH;
  }
}

std::array<Scalar, 3> parse_pfister(const Field& f, const std::string& csv) {
  std::array<Scalar, 3> out = {Scalar::one(f), Scalar::one(f),
                               Scalar::one(f)};
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t comma = csv.find(',', pos);
    std::string tok = comma == std::string::npos
                          ? csv.substr(pos)
                          : csv.substr(pos, comma - pos);
    if (tok.empty()) throw Error::usage("pfister spec needs three entries");
    out[i] = Scalar::parse(f, tok);
    if ((comma == std::string::npos) != (i == 2))
      throw Error::usage("pfister spec needs exactly three entries");
    pos = comma + 1;
  }
  return out;
}

const Session& sess(const comptri_algebra* a) { return a->owner->session; }

void check_same_session(const comptri_algebra* a, const comptri_algebra* b) {
  if (a->owner != b->owner)
    throw Error::usage("algebras belong to different sessions");
}

Json selftest_json(const Session& s);

}  // namespace

extern "C" {

comptri_status comptri_session_new(const char* field, const char* pfister,
                                   uint64_t seed, comptri_session** out) {
  return guarded([&] {
    if (!field || !pfister || !out) throw Error::usage("null argument");
    Field f = Field::parse(field);
    *out = new comptri_session{
        Session::create(f, parse_pfister(f, pfister), seed)};
  });
}

void comptri_session_free(comptri_session* s) { delete s; }

const char* comptri_last_error(void) { return g_last_error.c_str(); }

void comptri_string_free(char* s) { std::free(s); }

comptri_status comptri_algebra_cayley_dickson(comptri_session* s,
                                              comptri_algebra** out) {
  return guarded([&] {
    if (!s || !out) throw Error::usage("null argument");
    const auto& p = s->session.pfister();
    Json prov{{"kind", "cayley_dickson"},
              {"params", Json::array({scalar_json(p[0]), scalar_json(p[1]),
                                      scalar_json(p[2])})}};
    *out = new comptri_algebra{s, s->session.hurwitz(), std::move(prov)};
  });
}

comptri_status comptri_algebra_zorn(comptri_session* s,
                                    comptri_algebra** out) {
  return guarded([&] {
    if (!s || !out) throw Error::usage("null argument");
    const Field f = s->session.field();
    for (const Scalar& x : s->session.pfister())
      if (!x.is_one())
        throw Error::usage("zorn model needs pfister parameters 1,1,1");
    *out = new comptri_algebra{s, zorn_split(f), Json{{"kind", "zorn"}}};
  });
}

comptri_status comptri_algebra_from_json(comptri_session* s, const char* json,
                                         comptri_algebra** out) {
  return guarded([&] {
    if (!s || !json || !out) throw Error::usage("null argument");
    Json j = Json::parse(json, nullptr, false);
    if (j.is_discarded()) throw Error::usage("invalid JSON");
    CompositionAlgebra alg = algebra_from_json(j);
    if (alg.field() != s->session.field())
      throw Error::usage("algebra field differs from the session field");
    if (!(alg.form() == s->session.form()))
      throw Error::usage("algebra form differs from the session form");
    Json prov =
        j.contains("construction") ? j.at("construction") : Json(nullptr);
    *out = new comptri_algebra{s, std::move(alg), std::move(prov)};
  });
}

comptri_status comptri_algebra_base(comptri_session* s, int which,
                                    comptri_algebra** out) {
  return guarded([&] {
    if (!s || !out) throw Error::usage("null argument");
    if (which == 0)
      *out = new comptri_algebra{s, s->session.hurwitz(), Json(nullptr)};
    else if (which == 1)
      *out = new comptri_algebra{s, s->session.para(), Json(nullptr)};
    else
      throw Error::usage("base selector must be 0 (H0) or 1 (S0)");
  });
}

comptri_status comptri_algebra_to_json(const comptri_algebra* a, char** out) {
  return guarded([&] {
    if (!a || !out) throw Error::usage("null argument");
    const Json* prov = a->construction.is_null() ? nullptr : &a->construction;
    *out = dup_string(algebra_json(a->value, prov).dump());
  });
}

void comptri_algebra_free(comptri_algebra* a) { delete a; }

comptri_status comptri_check(const comptri_algebra* a, char** out_json) {
  return guarded([&] {
    if (!a || !out_json) throw Error::usage("null argument");
    // Re-certify from the raw table rather than trusting the handle.
    Scalar lambda = check_composition(a->value.alg());
    Json out{{"multiplier", scalar_json(lambda)}};
    if (a->value.unit()) out["unit"] = vector_json(*a->value.unit());
    *out_json = dup_string(out.dump());
  });
}

comptri_status comptri_unitalize(const comptri_algebra* a, char** out_json) {
  return guarded([&] {
    if (!a || !out_json) throw Error::usage("null argument");
    Unitalization u = unitalize(a->value);
    Json out{{"hurwitz", algebra_json(u.hurwitz)},
             {"f", matrix_json(u.f)},
             {"g", matrix_json(u.g)},
             {"e", vector_json(u.e)}};
    *out_json = dup_string(out.dump());
  });
}

comptri_status comptri_para(const comptri_algebra* a, comptri_algebra** out) {
  return guarded([&] {
    if (!a || !out) throw Error::usage("null argument");
    *out = new comptri_algebra{a->owner, para_hurwitz(a->value),
                               Json{{"kind", "para_hurwitz"}}};
  });
}

comptri_status comptri_symmetric_decomposition(const comptri_algebra* a,
                                               char** out_json) {
  return guarded([&] {
    if (!a || !out_json) throw Error::usage("null argument");
    SymmetricDecomposition sd = symmetric_decomposition(a->value);
    Json out{{"sym", algebra_json(sd.sym)},
             {"f", matrix_json(sd.f)},
             {"g", matrix_json(sd.g)}};
    *out_json = dup_string(out.dump());
  });
}

comptri_status comptri_triality(comptri_session* s, const comptri_algebra* a,
                                const char* h_json, char** out_json) {
  return guarded([&] {
    if (!s || !h_json || !out_json) throw Error::usage("null argument");
    if (a && a->owner != s)
      throw Error::usage("algebra belongs to a different session");
    const CompositionAlgebra& alg = a ? a->value : s->session.para();
    Json hj = Json::parse(h_json, nullptr, false);
    if (hj.is_discarded()) throw Error::usage("invalid JSON for h");
    Similarity h = similarity_from_json(s->session.form(), hj);
    TrialityPair pair = triality_components(alg, h);
    Json out{{"h1", similarity_json(pair.h1)},
             {"h2", similarity_json(pair.h2)},
             {"proj1", proj_json(ProjSimilarity::of(pair.h1))},
             {"proj2", proj_json(ProjSimilarity::of(pair.h2))}};
    *out_json = dup_string(out.dump());
  });
}

comptri_status comptri_functor_image(const comptri_algebra* a,
                                     char** out_json) {
  return guarded([&] {
    if (!a || !out_json) throw Error::usage("null argument");
    TrialitarianPairRepr repr = functor_image(sess(a), a->value);
    Json out{{"a1", marked_auto_json(repr.a1)},
             {"a2", marked_auto_json(repr.a2)},
             {"labels", Json::array({repr.label1(), repr.label2()})},
             {"trialitarian", repr.trialitarian()}};
    *out_json = dup_string(out.dump());
  });
}

comptri_status comptri_double_sign(const comptri_algebra* a, int* left,
                                   int* right) {
  return guarded([&] {
    if (!a || !left || !right) throw Error::usage("null argument");
    DoubleSign ds = double_sign(a->value);
    *left = ds.left;
    *right = ds.right;
  });
}

comptri_status comptri_iso_check(const comptri_algebra* a,
                                 const comptri_algebra* b, const char* h_json,
                                 int* verdict) {
  return guarded([&] {
    if (!a || !b || !h_json || !verdict) throw Error::usage("null argument");
    check_same_session(a, b);
    Json hj = Json::parse(h_json, nullptr, false);
    if (hj.is_discarded()) throw Error::usage("invalid JSON for h");
    Matrix8 h = matrix_from_doc(sess(a).field(), hj);
    *verdict = iso_check(sess(a), a->value, b->value, h) ? 1 : 0;
  });
}

comptri_status comptri_iso_search(const comptri_algebra* a,
                                  const comptri_algebra* b, uint64_t budget,
                                  char** out_json) {
  return guarded([&] {
    if (!a || !b || !out_json) throw Error::usage("null argument");
    check_same_session(a, b);
    IsoSearchOutcome out =
        iso_search(sess(a), a->value, b->value, static_cast<long>(budget));
    Json inv{{"double_sign_a", double_sign_json(double_sign(a->value))},
             {"double_sign_b", double_sign_json(double_sign(b->value))},
             {"symmetric_a", is_symmetric(a->value.alg())},
             {"symmetric_b", is_symmetric(b->value.alg())}};
    Json j{{"invariants", std::move(inv)}, {"tried", out.tried}};
    switch (out.kind) {
      case IsoSearchOutcome::Found:
        j["isomorphic"] = "yes";
        j["witness"] = matrix_json(*out.witness);
        break;
      case IsoSearchOutcome::NotIsomorphicByInvariant:
        j["isomorphic"] = "no-invariant";
        break;
      case IsoSearchOutcome::Unknown:
        j["isomorphic"] = "unknown";
        break;
    }
    *out_json = dup_string(j.dump());
    if (out.kind == IsoSearchOutcome::Unknown)
      throw Error::budget("Unknown", "isomorphism search budget exhausted");
  });
}

comptri_status comptri_normalize(comptri_session* s, const char* f_json,
                                 const char* g_json, char** out_json) {
  return guarded([&] {
    if (!s || !f_json || !g_json || !out_json)
      throw Error::usage("null argument");
    Json fj = Json::parse(f_json, nullptr, false);
    Json gj = Json::parse(g_json, nullptr, false);
    if (fj.is_discarded() || gj.is_discarded())
      throw Error::usage("invalid JSON for F or G");
    Matrix8 F = matrix_from_doc(s->session.field(), fj);
    Matrix8 G = matrix_from_doc(s->session.field(), gj);
    NormalizationChain nc =
        normalization_chain(s->session.hurwitz(), F, G);
    Json out{{"T", algebra_json(nc.sym)},
             {"f", matrix_json(nc.f)},
             {"g", matrix_json(nc.g)},
             {"hprime", algebra_json(nc.hprime)},
             {"iprime", matrix_json(nc.iprime)},
             {"sprime", algebra_json(nc.sprime)},
             {"lambda", scalar_json(nc.lambda)},
             {"mu", scalar_json(nc.mu)},
             {"eprime", vector_json(nc.eprime)}};
    *out_json = dup_string(out.dump());
  });
}

comptri_status comptri_census(comptri_session* s, uint64_t samples,
                              char** report_json, char** csv) {
  return guarded([&] {
    if (!s || !report_json) throw Error::usage("null argument");
    CensusReport rep = census(s->session, samples);
    *report_json = dup_string(census_json(rep, s->session.field()).dump());
    if (csv) *csv = dup_string(census_csv(rep));
  });
}

comptri_status comptri_selftest(comptri_session* s, char** report_json) {
  return guarded([&] {
    if (!s || !report_json) throw Error::usage("null argument");
    Json j = selftest_json(s->session);
    *report_json = dup_string(j.dump());
    if (!j.at("all_pass").get<bool>())
      throw Error::math("SelfTest", "self test failed");
  });
}

}  // extern "C"

namespace {

Json selftest_json(const Session& s) {
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const char* name, bool pass) {
    checks.push_back(Json{{"name", name}, {"pass", pass}});
    all = all && pass;
  };
  const QuadraticForm& q = s.form();

  record("hurwitz_multiplier_one", s.hurwitz().multiplier().is_one());
  record("hurwitz_unit_e1",
         s.hurwitz().unit() &&
             *s.hurwitz().unit() == Vector8::unit(s.field(), 0));
  record("para_symmetric", is_symmetric(s.para().alg()));
  record("double_sign_hurwitz",
         double_sign(s.hurwitz()) == DoubleSign{1, 1});
  record("double_sign_para", double_sign(s.para()) == DoubleSign{-1, -1});

  Rng rng = s.rng(0x5E1F);
  ProjSimilarity x =
      ProjSimilarity::of(random_reflection_product(q, 2, rng));
  ProjSimilarity y = rho_base(s, 1, rho_base(s, 1, rho_base(s, 1, x)));
  record("rho_order_three", y == x);
  record("rho_inverse_pair", rho_base(s, 2, rho_base(s, 1, x)) == x);

  auto [a1, a2] = marked_auto_of(s, s.para());
  record("functor_para_trivial",
         a1.r == 1 && a2.r == 2 && a1.coset.is_identity() &&
             a2.coset.is_identity());

  Similarity h = random_reflection_product(q, 4, rng);
  std::vector<Vector8> refl = cartan_dieudonne(q, h);
  Matrix8 prod = Matrix8::identity(s.field());
  for (const Vector8& u : refl) prod = prod * reflect(q, u).mat();
  record("cartan_dieudonne_roundtrip",
         prod == h.mat() && refl.size() <= 8 && refl.size() % 2 == 0);

  CliffordAlgebra cl(q);
  Similarity r0 = reflect(q, Vector8::unit(s.field(), 0));
  record("clifford_properness",
         cl.properness_via_centre(r0) == -1 &&
             cl.properness_via_centre(h) == is_proper(q, h.mat()));

  return Json{{"checks", std::move(checks)}, {"all_pass", all}};
}

}  // namespace
