#pragma once

#include <string>

#include <json.hpp>

#include "yrk/repn.hpp"

namespace yrk {

using nlohmann::json;

/// Scalars: exact rationals as "p/q" strings, exact complex as a pair of
/// such strings, float complex as [re, im], float real as a number.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, Backend preferred = Backend::exact);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, Backend preferred);

json cartan_to_json(const CartanData& c);
CartanData cartan_from_json(const json& j);

/// Representation files: generator matrices, declared poles, provenance tag.
json representation_to_json(const Representation& v);
Representation representation_from_json(const json& j);

/// Rational-function matrices, entries as {num: [...], den: [...]}.
json ratmat_to_json(const RatMat& m);
RatMat ratmat_from_json(const json& j, Backend preferred);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace yrk
