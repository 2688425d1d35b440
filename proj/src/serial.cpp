#include "serial.hpp"

#include <sstream>

#include "errors.hpp"

namespace comptri {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error::usage("malformed JSON: " + what);
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing ") + key);
  return j.at(key);
}

}  // namespace

Json field_json(const Field& f) {
  if (f.is_fp()) return Json{{"kind", "fp"}, {"p", f.p()}};
  return Json{{"kind", "rational"}};
}

Field field_from_json(const Json& j) {
  std::string kind = need(j, "kind").get<std::string>();
  if (kind == "fp") return Field::fp(need(j, "p").get<uint32_t>());
  if (kind == "rational") return Field::rationals();
  bad("unknown field kind '" + kind + "'");
}

Json scalar_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::of_int(f, j.get<long>());
  bad("scalar must be a string or integer");
}

Json vector_json(const Vector8& v) {
  Json a = Json::array();
  for (int i = 0; i < 8; ++i) a.push_back(scalar_json(v.c[i]));
  return a;
}

Vector8 vector_from_json(const Field& f, const Json& j) {
  if (!j.is_array() || j.size() != 8) bad("vector must have 8 entries");
  Vector8 v;
  for (int i = 0; i < 8; ++i) v.c[i] = scalar_from_json(f, j.at(i));
  return v;
}

Json matrix_json(const Matrix8& m) {
  Json rows = Json::array();
  for (int i = 0; i < 8; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 8; ++j) row.push_back(scalar_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix8 matrix_from_json(const Field& f, const Json& j) {
  if (!j.is_array() || j.size() != 8) bad("matrix must have 8 rows");
  Matrix8 m;
  for (int i = 0; i < 8; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != 8) bad("matrix row must have 8 entries");
    for (int k = 0; k < 8; ++k) m.at(i, k) = scalar_from_json(f, row.at(k));
  }
  return m;
}

Matrix8 matrix_from_doc(const Field& f, const Json& j) {
  if (j.is_object() && j.contains("matrix"))
    return matrix_from_json(f, j.at("matrix"));
  return matrix_from_json(f, j);
}

Json form_json(const QuadraticForm& q) {
  if (const auto& p = q.pfister_params()) {
    Json params = Json::array();
    for (const Scalar& s : *p) params.push_back(scalar_json(s));
    return Json{{"kind", "pfister3"}, {"params", std::move(params)}};
  }
  return Json{{"kind", "gram"}, {"matrix", matrix_json(q.gram())}};
}

QuadraticForm form_from_json(const Field& f, const Json& j) {
  std::string kind = need(j, "kind").get<std::string>();
  if (kind == "pfister3") {
    const Json& p = need(j, "params");
    if (!p.is_array() || p.size() != 3) bad("pfister3 needs 3 parameters");
    return QuadraticForm::pfister3(scalar_from_json(f, p.at(0)),
                                   scalar_from_json(f, p.at(1)),
                                   scalar_from_json(f, p.at(2)));
  }
  if (kind == "gram")
    return QuadraticForm::from_gram(matrix_from_json(f, need(j, "matrix")));
  bad("unknown form kind '" + kind + "'");
}

Json algebra_json(const CompositionAlgebra& c, const Json* construction) {
  Json gamma = Json::array();
  for (int i = 0; i < 8; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 8; ++j)
      row.push_back(vector_json(c.alg().basis_product(i, j)));
    gamma.push_back(std::move(row));
  }
  Json out{{"field", field_json(c.field())},
           {"form", form_json(c.form())},
           {"gamma", std::move(gamma)},
           {"multiplier", scalar_json(c.multiplier())}};
  if (c.unit()) out["unit"] = vector_json(*c.unit());
  if (construction) out["construction"] = *construction;
  return out;
}

CompositionAlgebra algebra_from_json(const Json& j) {
  Field f = field_from_json(need(j, "field"));
  auto form = std::make_shared<const QuadraticForm>(
      form_from_json(f, need(j, "form")));
  const Json& gamma = need(j, "gamma");
  if (!gamma.is_array() || gamma.size() != 8) bad("gamma must have 8 rows");
  AlgebraK alg;
  alg.form = form;
  for (int i = 0; i < 8; ++i) {
    const Json& row = gamma.at(i);
    if (!row.is_array() || row.size() != 8) bad("gamma row must have 8 entries");
    for (int k = 0; k < 8; ++k)
      alg.basis_product(i, k) = vector_from_json(f, row.at(k));
  }
  CompositionAlgebra c = CompositionAlgebra::certify(std::move(alg));
  if (j.contains("multiplier")) {
    Scalar claimed = scalar_from_json(f, j.at("multiplier"));
    if (!(claimed == c.multiplier()))
      throw Error::math("NotComposition",
                        "embedded certificate disagrees with recheck");
  }
  return c;
}

Json similarity_json(const Similarity& s) {
  return Json{{"matrix", matrix_json(s.mat())},
              {"mu", scalar_json(s.mu())},
              {"sign", s.sign()}};
}

Similarity similarity_from_json(const QuadraticForm& q, const Json& j) {
  Matrix8 m = matrix_from_doc(q.field(), j);
  Similarity s = Similarity::from_matrix(q, std::move(m));
  if (j.is_object()) {
    if (j.contains("mu") &&
        !(scalar_from_json(q.field(), j.at("mu")) == s.mu()))
      throw Error::math("NotASimilarity", "embedded multiplier disagrees");
    if (j.contains("sign") && j.at("sign").get<int>() != s.sign())
      throw Error::math("NotASimilarity", "embedded sign disagrees");
  }
  return s;
}

Json proj_json(const ProjSimilarity& p) {
  return Json{{"matrix", matrix_json(p.rep())}, {"sign", p.sign()}};
}

Json marked_auto_json(const MarkedAuto& a) {
  return Json{{"r", ((a.r % 3) + 3) % 3},
              {"coset", proj_json(a.coset)},
              {"base", "session"}};
}

Json double_sign_json(const DoubleSign& d) {
  return Json::array({d.left, d.right});
}

Json census_json(const CensusReport& r, const Field& f) {
  Json rows = Json::array();
  for (const CensusRow& row : r.rows)
    rows.push_back(Json{{"index", row.index},
                        {"sign_f", row.sign_f},
                        {"sign_g", row.sign_g},
                        {"double_sign", double_sign_json(row.ds)},
                        {"symmetric", row.symmetric}});
  return Json{
      {"field", field_json(f)},
      {"samples", r.samples},
      {"seed", r.seed},
      {"double_sign_counts",
       Json{{"+1,+1", r.count_pp},
            {"+1,-1", r.count_pm},
            {"-1,+1", r.count_mp},
            {"-1,-1", r.count_mm}}},
      {"symmetric_count", r.symmetric_count},
      {"iso_search",
       Json{{"found", r.iso_found},
            {"no_invariant", r.iso_no_invariant},
            {"unknown", r.iso_unknown}}},
      {"rows", std::move(rows)}};
}

std::string census_csv(const CensusReport& r) {
  std::ostringstream os;
  os << "index,sign_f,sign_g,sign_L,sign_R,symmetric\n";
  for (const CensusRow& row : r.rows)
    os << row.index << ',' << row.sign_f << ',' << row.sign_g << ','
       << row.ds.left << ',' << row.ds.right << ','
       << (row.symmetric ? 1 : 0) << '\n';
  return os.str();
}

}  // namespace comptri
