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

#include "gsmefb/channel.hpp"

#include "gsmefb/errors.hpp"
#include "gsmefb/parallel.hpp"

#include <cmath>

namespace gsmefb {

void ChannelConfig::validate() const {
    if (n_t < 1 || n_r < 1)
        throw ConfigError("channel config: antenna counts must be positive");
    if (n_cl < 1 || n_ray < 1)
        throw ConfigError("channel config: n_cl and n_ray must be at least 1");
    if (!(wavelength > 0.0) || !(spacing > 0.0))
        throw ConfigError("channel config: wavelength and spacing must be positive");
    if (!(angular_spread > 0.0))
        throw ConfigError("channel config: angular spread must be positive");
    if (!(tx_sector_lo < tx_sector_hi) || !(rx_sector_lo < rx_sector_hi))
        throw ConfigError("channel config: sectors must be nonempty intervals");
}

Eigen::VectorXcd steering_vector(double theta_deg, int n, double wavelength, double spacing) {
    if (n < 1)
        throw DimensionError("steering_vector: array size must be at least 1");
    const double theta = theta_deg * M_PI / 180.0;
    const double step = 2.0 * M_PI * spacing / wavelength * std::sin(theta);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::VectorXcd a(n);
    for (int k = 0; k < n; ++k)
        a(k) = std::polar(scale, step * static_cast<double>(k));
    return a;
}

ChannelMatrix sample_channel(const ChannelConfig &cfg, Rng &rng) {
    cfg.validate();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(cfg.n_r, cfg.n_t);
    const double cap = 3.0 * cfg.angular_spread;
    for (int i = 0; i < cfg.n_cl; ++i) {
        const double center_t = rng.uniform(cfg.tx_sector_lo, cfg.tx_sector_hi);
        const double center_r = rng.uniform(cfg.rx_sector_lo, cfg.rx_sector_hi);
        for (int j = 0; j < cfg.n_ray; ++j) {
            const double aod = center_t + rng.truncated_laplace(cfg.angular_spread, cap);
            const double aoa = center_r + rng.truncated_laplace(cfg.angular_spread, cap);
            const std::complex<double> gain = rng.cnormal();
            const Eigen::VectorXcd ar = steering_vector(aoa, cfg.n_r, cfg.wavelength, cfg.spacing);
            const Eigen::VectorXcd at = steering_vector(aod, cfg.n_t, cfg.wavelength, cfg.spacing);
            h.noalias() += gain * ar * at.adjoint();
        }
    }
    const double scale = std::sqrt(static_cast<double>(cfg.n_t) * cfg.n_r /
                                   (static_cast<double>(cfg.n_cl) * cfg.n_ray));
    return ChannelMatrix{scale * h};
}

std::vector<ChannelMatrix> generate_dataset(const ChannelConfig &cfg, int count, const Rng &rng,
                                            int threads) {
    cfg.validate();
    if (count < 1)
        throw ConfigError("generate_dataset: count must be at least 1");
    std::vector<ChannelMatrix> out(count);
    parallel_for(count, threads, [&](int i) {
        Rng sub = rng.fork(static_cast<std::uint64_t>(i));
        out[i] = sample_channel(cfg, sub);
    });
    return out;
}

} // namespace gsmefb
