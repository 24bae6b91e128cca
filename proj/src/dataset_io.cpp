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

#include "gsmefb/dataset_io.hpp"

#include "gsmefb/errors.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace gsmefb {

static_assert(std::endian::native == std::endian::little,
              "dataset format is little-endian; byte swapping is not implemented");

namespace {

constexpr char kMagic[8] = {'G', 'E', 'F', 'B', 'C', 'H', 'A', 'N'};
constexpr std::uint32_t kVersion = 1;

template <typename T> void put(std::ostream &os, T v) {
    os.write(reinterpret_cast<const char *>(&v), sizeof(T));
}

template <typename T> T get(std::istream &is) {
    T v{};
    is.read(reinterpret_cast<char *>(&v), sizeof(T));
    return v;
}

} // namespace

void write_dataset(const std::string &path, const std::vector<ChannelMatrix> &data) {
    if (data.empty())
        throw ConfigError("write_dataset: empty dataset");
    const auto n_r = static_cast<std::uint32_t>(data.front().h.rows());
    const auto n_t = static_cast<std::uint32_t>(data.front().h.cols());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw std::runtime_error("write_dataset: cannot open " + path);
    os.write(kMagic, sizeof(kMagic));
    put(os, kVersion);
    put(os, n_r);
    put(os, n_t);
    put(os, static_cast<std::uint64_t>(data.size()));
    for (const auto &cm : data) {
        if (cm.h.rows() != n_r || cm.h.cols() != n_t)
            throw DimensionError("write_dataset: inconsistent matrix shapes");
        for (std::uint32_t r = 0; r < n_r; ++r)
            for (std::uint32_t t = 0; t < n_t; ++t) {
                put(os, cm.h(r, t).real());
                put(os, cm.h(r, t).imag());
            }
    }
    if (!os)
        throw std::runtime_error("write_dataset: write failed for " + path);
}

std::vector<ChannelMatrix> read_dataset(const std::string &path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("read_dataset: cannot open " + path);
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("read_dataset: bad magic in " + path);
    if (get<std::uint32_t>(is) != kVersion)
        throw std::runtime_error("read_dataset: unsupported version in " + path);
    const auto n_r = get<std::uint32_t>(is);
    const auto n_t = get<std::uint32_t>(is);
    const auto count = get<std::uint64_t>(is);
    std::vector<ChannelMatrix> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Eigen::MatrixXcd h(n_r, n_t);
        for (std::uint32_t r = 0; r < n_r; ++r)
            for (std::uint32_t t = 0; t < n_t; ++t) {
                const double re = get<double>(is);
                const double im = get<double>(is);
                h(r, t) = {re, im};
            }
        out.push_back(ChannelMatrix{std::move(h)});
    }
    if (!is)
        throw std::runtime_error("read_dataset: truncated file " + path);
    return out;
}

} // namespace gsmefb
