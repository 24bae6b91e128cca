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

#include "gsmefb/linalg.hpp"

#include "gsmefb/errors.hpp"

#include <cmath>

namespace gsmefb::lin {

void cholesky(cd *a, int n) {
    for (int j = 0; j < n; ++j) {
        double d = a[j * n + j].real();
        for (int k = 0; k < j; ++k)
            d -= std::norm(a[j * n + k]);
        if (!(d > 0.0) || !std::isfinite(d))
            throw NumericalError("cholesky: matrix is not positive definite");
        const double ljj = std::sqrt(d);
        a[j * n + j] = ljj;
        for (int i = j + 1; i < n; ++i) {
            cd s = a[i * n + j];
            for (int k = 0; k < j; ++k)
                s -= a[i * n + k] * std::conj(a[j * n + k]);
            a[i * n + j] = s / ljj;
        }
    }
    // Zero the (stale) upper triangle so the factor can be used directly.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            a[i * n + j] = 0.0;
}

double logdet_from_cholesky(const cd *l, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        s += std::log(l[i * n + i].real());
    return 2.0 * s;
}

void solve_lower(const cd *l, int n, cd *y) {
    for (int i = 0; i < n; ++i) {
        cd s = y[i];
        for (int k = 0; k < i; ++k)
            s -= l[i * n + k] * y[k];
        y[i] = s / l[i * n + i].real();
    }
}

std::vector<cd> inverse_from_cholesky(const cd *l, int n) {
    // Build L^-1 (lower triangular), then A^-1 = L^-H L^-1.
    std::vector<cd> linv(static_cast<size_t>(n) * n, cd(0.0));
    for (int j = 0; j < n; ++j) {
        linv[j * n + j] = 1.0 / l[j * n + j].real();
        for (int i = j + 1; i < n; ++i) {
            cd s(0.0);
            for (int k = j; k < i; ++k)
                s -= l[i * n + k] * linv[k * n + j];
            linv[i * n + j] = s / l[i * n + i].real();
        }
    }
    std::vector<cd> inv(static_cast<size_t>(n) * n, cd(0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cd s(0.0);
            const int k0 = std::max(i, j);
            for (int k = k0; k < n; ++k)
                s += std::conj(linv[k * n + i]) * linv[k * n + j];
            inv[i * n + j] = s;
        }
    return inv;
}

} // namespace gsmefb::lin
