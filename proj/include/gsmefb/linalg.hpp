// SPDX-License-Identifier: Apache-2.0
//
// gsmefb  GSM-aided mmWave MIMO link simulation with learned CSI feedback
// Copyright (C) 2026 gsmefb contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef GSMEFB_LINALG_HPP
#define GSMEFB_LINALG_HPP

#include <complex>
#include <vector>

namespace gsmefb::lin {

using cd = std::complex<double>;

/// In-place lower-triangular Cholesky factor of a Hermitian positive-definite
/// matrix (row-major, n x n). Only the lower triangle of the result is valid.
/// Throws NumericalError if a pivot is not strictly positive.
void cholesky(cd *a, int n);

/// log(det) from a Cholesky factor: 2 * sum(log(real(diag L))).
double logdet_from_cholesky(const cd *l, int n);

/// Solves L x = y in place (forward substitution, lower-triangular L).
void solve_lower(const cd *l, int n, cd *y);

/// Full inverse of the factored matrix: (L L^H)^-1 = L^-H L^-1.
std::vector<cd> inverse_from_cholesky(const cd *l, int n);

} // namespace gsmefb::lin

#endif
