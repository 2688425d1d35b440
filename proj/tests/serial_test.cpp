#include <doctest.h>

#include "serial.hpp"
#include "session.hpp"

using namespace comptri;

TEST_CASE("scalar and matrix round trips") {
  Field f5 = Field::fp(5);
  Scalar a = Scalar::of_int(f5, 3);
  CHECK(scalar_from_json(f5, scalar_json(a)) == a);

  Field fq = Field::rationals();
  Scalar b = Scalar::parse(fq, "-3/4");
  CHECK(scalar_json(b) == Json("-3/4"));
  CHECK(scalar_from_json(fq, scalar_json(b)) == b);

  Matrix8 m = Matrix8::identity(f5) * Scalar::of_int(f5, 2);
  CHECK(matrix_from_json(f5, matrix_json(m)) == m);
  CHECK(matrix_from_doc(f5, Json{{"matrix", matrix_json(m)}}) == m);
}

TEST_CASE("field and form round trips") {
  CHECK(field_from_json(field_json(Field::fp(7))) == Field::fp(7));
  CHECK(field_from_json(field_json(Field::rationals())) ==
        Field::rationals());

  Field f3 = Field::fp(3);
  QuadraticForm q = QuadraticForm::pfister3(
      Scalar::one(f3), Scalar::one(f3), Scalar::one(f3));
  Json j = form_json(q);
  CHECK(j.at("kind") == "pfister3");
  CHECK(form_from_json(f3, j) == q);
  Json gram{{"kind", "gram"}, {"matrix", matrix_json(q.gram())}};
  CHECK(form_from_json(f3, gram) == q);
}

TEST_CASE("algebra JSON round trips with its certificate") {
  Field f3 = Field::fp(3);
  Scalar one = Scalar::one(f3);
  CompositionAlgebra h = cayley_dickson(one, one, one);
  Json j = algebra_json(h);
  CHECK(j.at("multiplier") == "1");
  CHECK(j.contains("unit"));
  CompositionAlgebra back = algebra_from_json(j);
  CHECK(back.alg() == h.alg());
  CHECK(back.multiplier() == h.multiplier());

  // A tampered certificate is rejected on load.
  Json bad = j;
  bad["multiplier"] = "2";
  CHECK_THROWS_AS((void)algebra_from_json(bad), Error);

  // A tampered table fails recertification.
  Json worse = j;
  worse["gamma"][2][5][0] = "1";
  CHECK_THROWS_AS((void)algebra_from_json(worse), Error);
}

TEST_CASE("similarity and marked-auto serialization") {
  Field f5 = Field::fp(5);
  Scalar one = Scalar::one(f5);
  Session s = Session::create(f5, {one, one, one}, 3);
  Rng rng = s.rng(1);
  Similarity h = random_reflection_product(s.form(), 2, rng);
  Json j = similarity_json(h);
  Similarity back = similarity_from_json(s.form(), j);
  CHECK(back.mat() == h.mat());
  CHECK(back.mu() == h.mu());
  CHECK(back.sign() == h.sign());
  // A bare matrix works too.
  CHECK(similarity_from_json(s.form(), matrix_json(h.mat())).mat() == h.mat());

  auto [a1, a2] = marked_auto_of(s, s.hurwitz());
  Json m = marked_auto_json(a1);
  CHECK(m.at("r") == 1);
  CHECK(m.at("base") == "session");
  CHECK(m.at("coset").contains("matrix"));
  (void)a2;
}

TEST_CASE("census serialization is stable") {
  Field f3 = Field::fp(3);
  Scalar one = Scalar::one(f3);
  Session s = Session::create(f3, {one, one, one}, 7);
  CensusReport rep = census(s, 8);
  Json j = census_json(rep, f3);
  CHECK(j.at("samples") == 8);
  CHECK(j.at("rows").size() == 8);
  std::string csv = census_csv(rep);
  CHECK(csv.rfind("index,", 0) == 0);
  // One header plus one line per row.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
}
