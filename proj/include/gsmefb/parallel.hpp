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

#ifndef GSMEFB_PARALLEL_HPP
#define GSMEFB_PARALLEL_HPP

#include <functional>

namespace gsmefb {

/// Runs fn(i) for i in [0, count). With threads > 1 the index range is
/// partitioned into contiguous blocks, one worker per block; every index is
/// processed by exactly one worker, so results never depend on the thread
/// count as long as fn(i) writes only to slot i. Exceptions from workers are
/// rethrown on the calling thread.
void parallel_for(int count, int threads, const std::function<void(int)> &fn);

/// Worker count from the GSMEFB_THREADS environment variable, falling back
/// to the hardware concurrency. Always at least 1.
int default_thread_count();

} // namespace gsmefb

#endif
