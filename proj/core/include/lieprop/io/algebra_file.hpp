#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lieprop/lie/algebra.hpp"

namespace lieprop::io {

/// Reads the JSON algebra file format:
///   {"field": "Q" | {"Fp": p}, "dim": n, "labels": [...]?,
///    "brackets": [{"i": i, "j": j, "v": {"k": "scalar", ...}}, ...]}
/// Syntax and structure problems raise ParseError with a line:column or
/// JSON-pointer location; scalars must be canonical (NonCanonicalScalar);
/// the table must satisfy Jacobi (JacobiViolation).
LieAlgebra parse_algebra(std::string_view text);

LieAlgebra read_algebra_file(const std::string& path);

/// Canonical bytes: fixed key order, two-space indentation, brackets sorted
/// by (i, j), zero coordinates omitted, labels only when custom, trailing newline.
std::string emit_algebra(const LieAlgebra& L);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

}  // namespace lieprop::io
