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

#include "gsmefb/gsm_topology.hpp"

#include "gsmefb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gsmefb {

void GsmConfig::validate() const {
    if (n_t <= 0 || n_r <= 0 || n_g <= 0 || n_k <= 0 || n_rf <= 0 || n_s <= 0)
        throw ConfigError("gsm config: all counts must be positive");
    if (n_t != n_g * n_k)
        throw ConfigError("gsm config: n_t must equal n_g * n_k (got " + std::to_string(n_t) +
                          " vs " + std::to_string(n_g) + "*" + std::to_string(n_k) + ")");
    if (n_rf > n_g)
        throw ConfigError("gsm config: n_rf must not exceed n_g");
    if (n_s > n_rf)
        throw ConfigError("gsm config: n_s must not exceed n_rf");
}

Eigen::MatrixXd Connector::matrix() const {
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n_t, n_rf());
    for (int j = 0; j < n_rf(); ++j)
        for (int k = 0; k < n_k; ++k)
            c(groups[j] * n_k + k, j) = 1.0;
    return c;
}

std::vector<std::uint8_t> Connector::activation() const {
    std::vector<std::uint8_t> act(n_t, 0);
    for (int g : groups)
        for (int k = 0; k < n_k; ++k)
            act[g * n_k + k] = 1;
    return act;
}

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > (UINT64_MAX >> 8) / num)
            throw ConfigError("gsm config: candidate count overflows");
        r = r * num / i;
    }
    return r;
}

} // namespace

std::pair<std::uint64_t, int> count_legal(const GsmConfig &cfg) {
    cfg.validate();
    const std::uint64_t m_bar = binomial(cfg.n_g, cfg.n_rf);
    int log2_floor = 0;
    while ((m_bar >> (log2_floor + 1)) != 0)
        ++log2_floor;
    return {m_bar, 1 << log2_floor};
}

std::vector<Connector> enumerate_candidates(const GsmConfig &cfg) {
    cfg.validate();
    std::vector<Connector> out;
    std::vector<int> combo(cfg.n_rf);
    for (int j = 0; j < cfg.n_rf; ++j)
        combo[j] = j;
    while (true) {
        out.push_back(Connector{cfg.n_t, cfg.n_k, combo});
        // next combination in lexicographic order
        int j = cfg.n_rf - 1;
        while (j >= 0 && combo[j] == cfg.n_g - cfg.n_rf + j)
            --j;
        if (j < 0)
            break;
        ++combo[j];
        for (int i = j + 1; i < cfg.n_rf; ++i)
            combo[i] = combo[i - 1] + 1;
    }
    return out;
}

int hamming_distance(const Connector &p, const Connector &q) {
    if (p.n_t != q.n_t || p.n_rf() != q.n_rf() || p.n_k != q.n_k)
        throw DimensionError("hamming_distance: connector shapes differ");
    const auto pa = p.activation();
    const auto qa = q.activation();
    int d = 0;
    for (int i = 0; i < p.n_t; ++i)
        d += pa[i] ^ qa[i];
    return d;
}

ConnectorSet select_legal(const std::vector<Connector> &candidates, int m, int seed_index) {
    if (candidates.empty())
        throw ConfigError("select_legal: no candidates");
    if (m < 1 || static_cast<size_t>(m) > candidates.size())
        throw ConfigError("select_legal: m exceeds candidate count");
    if (seed_index < 0 || static_cast<size_t>(seed_index) >= candidates.size())
        throw ConfigError("select_legal: seed index out of range");

    const int n = static_cast<int>(candidates.size());
    std::vector<bool> chosen(n, false);
    std::vector<int> order;
    order.reserve(m);
    order.push_back(seed_index);
    chosen[seed_index] = true;

    while (static_cast<int>(order.size()) < m) {
        int best = -1;
        double best_avg = -1.0;
        for (int c = 0; c < n; ++c) {
            if (chosen[c])
                continue;
            double sum = 0.0;
            for (int o : order)
                sum += hamming_distance(candidates[c], candidates[o]);
            const double avg = sum / static_cast<double>(order.size());
            if (avg > best_avg ||
                (avg == best_avg && candidates[c].groups < candidates[best].groups)) {
                best = c;
                best_avg = avg;
            }
        }
        order.push_back(best);
        chosen[best] = true;
    }

    ConnectorSet set;
    set.m_bar = candidates.size();
    set.m = m;
    for (int idx : order)
        set.legal.push_back(candidates[idx]);
    return set;
}

ConnectorSet build_connector_set(const GsmConfig &cfg, int seed_index) {
    auto [m_bar, m] = count_legal(cfg);
    auto set = select_legal(enumerate_candidates(cfg), m, seed_index);
    set.m_bar = m_bar;
    return set;
}

} // namespace gsmefb
