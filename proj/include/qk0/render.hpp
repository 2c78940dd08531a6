#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qk0/field.hpp"
#include "qk0/label.hpp"

namespace qk0 {

/// 2^exponent as a decimal string (arbitrary size).
std::string render_pow2(std::uint64_t exponent);

/// Label grammar: K(8), C(2), H(4)^2 ...
std::string render_label(const AlgebraLabel& label);

/// Z | Z/2 | 0
std::string render_k0(K0Class k0);

/// CLI field descriptor -> profile. Accepts level-1 | level-2 | level-inf
/// | Fp:<p> | Q.
FieldProfile parse_field_descriptor(const std::string& desc);

enum class TableKind { DefinitePlus, DefiniteMinus, Paper8r, Paper4r };

TableKind parse_table_kind(const std::string& kind);

/// Formatted table rows (one string per row, no trailing newline).
std::vector<std::string> table_rows(FieldProfile profile, TableKind kind, unsigned r,
                                    unsigned max_n);

/// The one-line `compute` answer.
std::string compute_line(FieldProfile profile, const SignatureForm& q);

} // namespace qk0
