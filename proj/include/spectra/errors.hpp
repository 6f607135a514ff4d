// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

/// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad inputs: malformed files, invalid parameters, contract violations at the API boundary.
struct InputError : Error {
  using Error::Error;
};

/// Failures discovered during computation (singular factorizations, invalid model constants).
struct NumericalError : Error {
  using Error::Error;
};

#define SPECTRA_DEFINE_ERROR(NAME, BASE) \
  struct NAME : BASE {                   \
    using BASE::BASE;                    \
  }

SPECTRA_DEFINE_ERROR(NotSquare, InputError);
SPECTRA_DEFINE_ERROR(NotHermitian, InputError);
SPECTRA_DEFINE_ERROR(DimensionTooLarge, InputError);
SPECTRA_DEFINE_ERROR(InvalidRadius, InputError);
SPECTRA_DEFINE_ERROR(NodeCountOutOfRange, InputError);
SPECTRA_DEFINE_ERROR(EmptyInterval, InputError);
SPECTRA_DEFINE_ERROR(IndexOutOfRange, InputError);
SPECTRA_DEFINE_ERROR(ZeroVector, InputError);
SPECTRA_DEFINE_ERROR(DimensionMismatch, InputError);
SPECTRA_DEFINE_ERROR(InvalidProbability, InputError);
SPECTRA_DEFINE_ERROR(PadValueInsideInterval, InputError);
SPECTRA_DEFINE_ERROR(FileNotFound, InputError);
SPECTRA_DEFINE_ERROR(ParseError, InputError);
SPECTRA_DEFINE_ERROR(IoError, InputError);
SPECTRA_DEFINE_ERROR(BackendUnavailable, InputError);

SPECTRA_DEFINE_ERROR(SingularShift, NumericalError);
SPECTRA_DEFINE_ERROR(InvalidConstant, NumericalError);

#undef SPECTRA_DEFINE_ERROR

}  // namespace spectra
