#pragma once

#include "ddmf/unitary.hpp"

#include <optional>
#include <string>

namespace ddmf {

/// Short product name over {I, N, V, V+, R(p/q)}, at most three factors,
/// leftmost factor applied last ("VN" is V*NOT). Nullopt when the matrix
/// is not reachable that way.
std::optional<std::string> symbolic_name(const Unitary2& m);

/// symbolic_name when available, else the entry-wise rendering.
std::string matrix_name(const Unitary2& m);

} // namespace ddmf
