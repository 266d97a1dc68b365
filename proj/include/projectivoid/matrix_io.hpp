#pragma once

// Matrix documents: {"p": <prime>, "m": <rank>, "entries": [[<series>, ...], ...]}
// with row-major entries written in the series literal grammar. Classical
// Laurent matrices use the same shape with integer exponents only; the
// letter `s` is accepted as a synonym for `v`.

#include <optional>
#include <string>
#include <string_view>

#include "projectivoid/classical.hpp"
#include "projectivoid/matrix.hpp"

namespace projectivoid {

/// `session` (when given) must agree with the document's "p".
SMatrix parse_matrix(std::string_view json_text, std::optional<Prime> session = std::nullopt);
std::string to_json(const SMatrix& a);

/// Entries are read over F_p when `finite_field`, otherwise over Q; "p" is
/// still required and validated.
LMatrix parse_laurent_matrix(std::string_view json_text, bool finite_field,
                             std::optional<Prime> session = std::nullopt);
std::string to_json(const LMatrix& a, Prime p);

}  // namespace projectivoid
