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

#ifndef GSMEFB_BEAMFORMING_HPP
#define GSMEFB_BEAMFORMING_HPP

#include "gsmefb/gsm_topology.hpp"

#include <Eigen/Core>
#include <vector>

namespace gsmefb {

/// Global analog beamformer: one phase shifter per antenna,
/// A = diag(exp(j*theta)) / sqrt(n_k).
struct AnalogBeamformer {
    Eigen::VectorXd theta_a; // radians, length n_t
    int n_k = 1;

    /// Diagonal of A (each entry has modulus 1/sqrt(n_k)).
    Eigen::VectorXcd diag() const;
};

/// One digital beamformer (n_rf x n_s) per legal connecting matrix.
struct DigitalBeamformerSet {
    std::vector<Eigen::MatrixXcd> d;
};

struct HybridBeamformer {
    AnalogBeamformer analog;
    DigitalBeamformerSet digital;
    ConnectorSet connectors;
};

/// Dense analog beamformer matrix (n_t x n_t).
Eigen::MatrixXcd build_analog(const Eigen::VectorXd &theta_a, int n_k);

/// Scales a raw digital beamformer so that ||A C_m D_m||_F^2 = n_s exactly.
/// Throws DegenerateBeamformerError when ||A C_m D_hat||_F < 1e-12.
Eigen::MatrixXcd normalize_digital(const AnalogBeamformer &a, const Connector &c_m,
                                   const Eigen::MatrixXcd &d_hat);

/// Noiseless signal map H A C_m D_m (n_r x n_s); power scaling and noise are
/// applied by the rate/pilot models.
Eigen::MatrixXcd effective_channel(const Eigen::MatrixXcd &h, const AnalogBeamformer &a,
                                   const Connector &c_m, const Eigen::MatrixXcd &d_m);

/// A * C_m (n_t x n_rf): column j carries the phase shifters of the group
/// driven by RF chain j. Columns are orthonormal.
Eigen::MatrixXcd analog_connector_product(const AnalogBeamformer &a, const Connector &c_m);

} // namespace gsmefb

#endif
