// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "spectra/linalg.hpp"

namespace spectra {

/// Read a Matrix Market file into a validated Hermitian operator.
/// Supported headers: coordinate or array format; real / integer / complex
/// fields; general / symmetric / hermitian symmetry. Symmetric and hermitian
/// inputs may list only one triangle; general inputs must be Hermitian within
/// the ingestion tolerance (they are symmetrized on construction).
/// Throws FileNotFound, ParseError, NotSquare, NotHermitian.
HermitianOperator load_matrix_market(const std::string& path);

/// Stream variant of load_matrix_market (same validation, no file handling).
HermitianOperator read_matrix_market(std::istream& in);

}  // namespace spectra
