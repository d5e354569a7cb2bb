#pragma once

#include <stdexcept>
#include <string>

#include "schur/lie_algebra.hpp"

namespace schur {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Algebra file schema (JSON, UTF-8):
///   {"dim": D, "name": "...", "brackets": [[i, j, [[k, "p/q"], ...]], ...]}
/// with 0 <= i < j < D, component indices k < D, coefficients as exact
/// rational text. Unlisted pairs are zero; [e_j, e_i] = -[e_i, e_j] is
/// implied. Schema violations throw parse_error with a locus message. This
/// variant does not check the Lie axioms.
LieAlgebra parse_algebra_file_raw(const std::string& text);

/// parse_algebra_file_raw plus the antisymmetry/Jacobi validator; the first
/// violations are surfaced in the exception message.
LieAlgebra parse_algebra_file(const std::string& text);

/// Serializes in the schema above with brackets sorted by (i, j) and
/// components sorted by k; zero components are omitted, so the output is a
/// canonical form: equal tables give byte-identical text.
std::string write_algebra_file(const LieAlgebra& L);

}  // namespace schur
