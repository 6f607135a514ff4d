// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace spectra {

using cplx = std::complex<double>;

}  // namespace spectra
