#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "jacobi/charvar.hpp"
#include "jacobi/symmetric.hpp"

namespace jacobi {

/// Key order is preserved so that written files are byte-stable.
using Json = nlohmann::ordered_json;

Json field_to_json(const FieldConfig &field);
/// Reads "field" ("rational" | "gfp") and "modulus" from an object.
FieldConfig field_from_json(const Json &j);

/// Scalars are strings ("p/q", "p", or a residue); integers are accepted on input.
Json scalar_to_json(const Scalar &s);
Scalar scalar_from_json(const Json &j, const FieldConfig &field);

Json monomial_to_json(const Monomial &m);
Monomial monomial_from_json(const Json &j, std::size_t nvars);

/// [{"coeff": "...", "exps": [...]}, ...] in descending glex order.
Json polynomial_to_json(const Polynomial &f);
Polynomial polynomial_from_json(const Json &j, RingPtr ring);

/// {"rows": r, "cols": c, "data": [[...], ...]}.
Json matrix_to_json(const ExactMatrix &m);
ExactMatrix matrix_from_json(const Json &j, const FieldConfig &field);

/// {"field", "modulus"?, "mode", "lambda"?, "entries", "seed"?}.
Json coeff_matrix_to_json(const CoeffMatrix &a);
CoeffMatrix coeff_matrix_from_json(const Json &j);

/// {"components": [[exps, ...] x 4], "dims": [...]}.
Json basis_to_json(const GradedBasis &b);
GradedBasis basis_from_json(const Json &j);

Json theta_to_json(const ThetaMatrices &t);
Json plethysm_to_json(const PlethysmReport &r);
Json equations_to_json(const CharVariety &v);
Json invariants_to_json(const VarietyInvariants &inv);

/// Raises ParseError on unreadable or malformed files.
Json read_json_file(const std::filesystem::path &path);
/// Two-space indentation plus a trailing newline.
std::string dump_json(const Json &j);
void write_json_file(const std::filesystem::path &path, const Json &j);

} // namespace jacobi
