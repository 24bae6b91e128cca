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

#include "gsmefb/beamforming.hpp"

#include "gsmefb/errors.hpp"

#include <cmath>

namespace gsmefb {

Eigen::VectorXcd AnalogBeamformer::diag() const {
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_k));
    Eigen::VectorXcd d(theta_a.size());
    for (Eigen::Index i = 0; i < theta_a.size(); ++i)
        d(i) = std::polar(scale, theta_a(i));
    return d;
}

Eigen::MatrixXcd build_analog(const Eigen::VectorXd &theta_a, int n_k) {
    AnalogBeamformer a{theta_a, n_k};
    return a.diag().asDiagonal();
}

Eigen::MatrixXcd analog_connector_product(const AnalogBeamformer &a, const Connector &c_m) {
    if (a.theta_a.size() != c_m.n_t)
        throw DimensionError("analog_connector_product: antenna counts differ");
    const Eigen::VectorXcd d = a.diag();
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(c_m.n_t, c_m.n_rf());
    for (int j = 0; j < c_m.n_rf(); ++j)
        for (int k = 0; k < c_m.n_k; ++k) {
            const int row = c_m.groups[j] * c_m.n_k + k;
            w(row, j) = d(row);
        }
    return w;
}

Eigen::MatrixXcd normalize_digital(const AnalogBeamformer &a, const Connector &c_m,
                                   const Eigen::MatrixXcd &d_hat) {
    if (d_hat.rows() != c_m.n_rf())
        throw DimensionError("normalize_digital: d_hat row count must equal n_rf");
    const Eigen::MatrixXcd acd = analog_connector_product(a, c_m) * d_hat;
    const double norm = acd.norm();
    if (norm < 1e-12)
        throw DegenerateBeamformerError("normalize_digital: ||A C D|| is numerically zero");
    const double n_s = static_cast<double>(d_hat.cols());
    return (std::sqrt(n_s) / norm) * d_hat;
}

Eigen::MatrixXcd effective_channel(const Eigen::MatrixXcd &h, const AnalogBeamformer &a,
                                   const Connector &c_m, const Eigen::MatrixXcd &d_m) {
    if (h.cols() != c_m.n_t)
        throw DimensionError("effective_channel: channel/connector antenna counts differ");
    if (d_m.rows() != c_m.n_rf())
        throw DimensionError("effective_channel: digital beamformer rows must equal n_rf");
    return h * (analog_connector_product(a, c_m) * d_m);
}

} // namespace gsmefb
