#pragma once

// Matrix text and JSON formats.
//
// Text (canonical):
//     n
//     a11 a12 ... a1n
//     ...
//     an1 an2 ... ann
// LF line endings, optional trailing newline, integers of any size.
//
// JSON: {"n": 2, "rows": [[0, 1], [-1, 0]]}. Entries may be JSON integers
// or decimal strings; the writer uses strings only for values that do not
// fit in 64 bits.

#include <quasicartan/matrix.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace quasicartan {

/// Parses either format, chosen by the first non-blank character.
/// Throws ParseError with a line/column diagnostic.
IntMatrix parse_matrix(std::string_view input);

IntMatrix parse_matrix_text(std::string_view input);
IntMatrix parse_matrix_json(std::string_view input);

std::string to_text(const IntMatrix& a);

nlohmann::json to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const nlohmann::json& j);

/// Big integers in reports are decimal strings.
inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace quasicartan
