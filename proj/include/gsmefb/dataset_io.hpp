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

#ifndef GSMEFB_DATASET_IO_HPP
#define GSMEFB_DATASET_IO_HPP

#include "gsmefb/channel.hpp"

#include <string>
#include <vector>

namespace gsmefb {

// Channel dataset file, little-endian:
//   magic "GEFBCHAN" (8 bytes), u32 version, u32 n_r, u32 n_t, u64 count,
//   then per matrix: row-major entries as f64 pairs (re, im).

void write_dataset(const std::string &path, const std::vector<ChannelMatrix> &data);

std::vector<ChannelMatrix> read_dataset(const std::string &path);

} // namespace gsmefb

#endif
