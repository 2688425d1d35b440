#pragma once

#include <json.hpp>

#include "compalg.hpp"
#include "functor.hpp"
#include "simgroup.hpp"
#include "triality.hpp"

namespace comptri {

using Json = nlohmann::json;

Json field_json(const Field& f);
Field field_from_json(const Json& j);

Json scalar_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j);

Json vector_json(const Vector8& v);
Vector8 vector_from_json(const Field& f, const Json& j);

Json matrix_json(const Matrix8& m);
Matrix8 matrix_from_json(const Field& f, const Json& j);

Json form_json(const QuadraticForm& q);
QuadraticForm form_from_json(const Field& f, const Json& j);

// Algebras serialize with their field, form, structure constants and
// certificate; an optional construction block records provenance.
Json algebra_json(const CompositionAlgebra& c,
                  const Json* construction = nullptr);
CompositionAlgebra algebra_from_json(const Json& j);

Json similarity_json(const Similarity& s);
Similarity similarity_from_json(const QuadraticForm& q, const Json& j);

Json proj_json(const ProjSimilarity& p);
Json marked_auto_json(const MarkedAuto& a);

Json double_sign_json(const DoubleSign& d);
Json census_json(const CensusReport& r, const Field& f);
std::string census_csv(const CensusReport& r);

// Reads either a bare matrix [[...]] or an object with a "matrix" key.
Matrix8 matrix_from_doc(const Field& f, const Json& j);

}  // namespace comptri
