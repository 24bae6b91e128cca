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

#ifndef GSMEFB_GSM_TOPOLOGY_HPP
#define GSMEFB_GSM_TOPOLOGY_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace gsmefb {

/// Antenna/RF-chain geometry of a generalized-spatial-modulation transmitter.
/// The n_t transmit antennas are split into n_g contiguous groups of n_k
/// antennas; n_rf of the groups are active at a time, one RF chain per group.
struct GsmConfig {
    int n_t = 16;  ///< transmit antennas
    int n_r = 4;   ///< receive antennas
    int n_g = 4;   ///< antenna groups
    int n_k = 4;   ///< antennas per group
    int n_rf = 2;  ///< RF chains
    int n_s = 2;   ///< data streams

    /// Throws ConfigError unless n_t = n_g * n_k, n_rf <= n_g, n_s <= n_rf
    /// and all counts are positive.
    void validate() const;
};

/// One antenna-connecting matrix: a binary n_t x n_rf matrix wiring RF chain
/// j to the antennas of group groups[j]. Groups are held in ascending order,
/// so RF chain j always drives the j-th smallest selected group.
struct Connector {
    int n_t = 0;
    int n_k = 0;
    std::vector<int> groups; // n_rf distinct group indices, ascending

    int n_rf() const { return static_cast<int>(groups.size()); }

    /// Dense 0/1 matrix (n_t x n_rf).
    Eigen::MatrixXd matrix() const;

    /// Row sums of matrix(): 1 where the antenna is active, else 0.
    std::vector<std::uint8_t> activation() const;

    bool operator==(const Connector &other) const = default;
};

/// The selected legal connecting matrices plus selection metadata.
struct ConnectorSet {
    std::vector<Connector> legal; // in greedy pick order
    std::uint64_t m_bar = 0;      // candidate count binom(n_g, n_rf)
    int m = 0;                    // legal count, largest power of two <= m_bar
};

/// Candidate count and legal count: m_bar = binom(n_g, n_rf),
/// m = 2^floor(log2(m_bar)).
std::pair<std::uint64_t, int> count_legal(const GsmConfig &cfg);

/// All binom(n_g, n_rf) connectors in lexicographic order of group tuples.
std::vector<Connector> enumerate_candidates(const GsmConfig &cfg);

/// Activation-pattern Hamming distance: sum over antennas of
/// rowsum(p) XOR rowsum(q). Throws DimensionError on shape mismatch.
int hamming_distance(const Connector &p, const Connector &q);

/// Greedy selection of m connectors starting from candidates[seed_index];
/// each pick maximizes the average Hamming distance to the already chosen
/// set, ties broken by the lowest lexicographic group tuple. The returned
/// legal list preserves pick order.
ConnectorSet select_legal(const std::vector<Connector> &candidates, int m,
                          int seed_index = 0);

/// Convenience: enumerate, count and select for a config in one call.
ConnectorSet build_connector_set(const GsmConfig &cfg, int seed_index = 0);

} // namespace gsmefb

#endif
