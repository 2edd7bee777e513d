#pragma once

// Textual and JSON forms of values, matrices, polynomials and circuits.
//
//   matrix (JSON)   {"n": 3, "rows": [[0, "inf", "1/2"], ...]}
//   matrix (text)   n lines of n whitespace-separated entries; '#' starts a comment
//   polynomial      {"degree": 2, "coeffs": [0, 2, 6]}
//
// Entries are JSON numbers (decimals are read exactly), "p/q" strings, or
// "inf" / "eps" / "ε". Output uses integers where possible, "p/q" strings
// otherwise, and "inf" for ε.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "minplus/matrix.hpp"
#include "minplus/network.hpp"
#include "minplus/polynomial.hpp"
#include "minplus/value.hpp"

namespace minplus {

using json = nlohmann::json;

/// JSON parse that keeps the literal text of non-integer numbers (as strings)
/// so decimals convert to exact rationals. Throws ParseError with line/column.
json parse_json(std::string_view text);

json to_json(const Value& v);
Value value_from_json(const json& j);

json to_json(const Matrix& a);
Matrix matrix_from_json(const json& j);

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const Factorization& f);
json to_json(const Breakpoint& b);
json to_json(const Circuit& c);
json to_json(const ExtendedCircuit& c);

/// JSON or plain text, detected by the first non-blank character.
Matrix parse_matrix(std::string_view text);
Polynomial parse_polynomial(std::string_view text);

/// A matrix file or a polynomial file (a JSON object with "coeffs").
using Input = std::variant<Matrix, Polynomial>;
Input parse_input(std::string_view text);

/// Whole file as a string; throws ParseError when it cannot be read.
std::string read_file(const std::filesystem::path& path);

/// Rows of the text matrix format, ε printed as "inf".
std::string to_text(const Matrix& a);

}  // namespace minplus
