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

#ifndef GSMEFB_CHANNEL_HPP
#define GSMEFB_CHANNEL_HPP

#include "gsmefb/rng.hpp"

#include <Eigen/Core>
#include <vector>

namespace gsmefb {

/// Clustered narrowband mmWave channel parameters (uniform linear arrays at
/// both ends). Angles in degrees, lengths in meters.
struct ChannelConfig {
    int n_t = 16;
    int n_r = 4;
    int n_cl = 2;                 ///< clusters
    int n_ray = 8;                ///< rays per cluster
    double wavelength = 0.005;    ///< 60 GHz carrier
    double spacing = 0.0025;      ///< element spacing, default wavelength/2
    double angular_spread = 7.5;  ///< per-ray azimuth spread (std dev, deg)
    double tx_sector_lo = -30.0;
    double tx_sector_hi = 30.0;
    double rx_sector_lo = -180.0;
    double rx_sector_hi = 180.0;
    std::uint64_t rng_seed = 1;

    void validate() const;
};

/// One downlink channel realization, n_r x n_t.
struct ChannelMatrix {
    Eigen::MatrixXcd h;
};

/// Unit-norm ULA steering vector: entry k is
/// exp(j * 2*pi*spacing/wavelength * k * sin(theta)) / sqrt(n).
Eigen::VectorXcd steering_vector(double theta_deg, int n, double wavelength, double spacing);

/// One clustered-channel draw. Cluster centers are uniform on the configured
/// sector; ray offsets are Laplace with the configured spread, truncated at
/// three standard deviations; path gains are CN(0, 1). The overall scale
/// makes E||H||_F^2 = n_t * n_r.
ChannelMatrix sample_channel(const ChannelConfig &cfg, Rng &rng);

/// `count` independent draws using per-sample sub-streams of `rng`, so the
/// result depends only on the rng seed and the sample index.
std::vector<ChannelMatrix> generate_dataset(const ChannelConfig &cfg, int count, const Rng &rng,
                                            int threads = 1);

} // namespace gsmefb

#endif
