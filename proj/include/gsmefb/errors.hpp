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

#ifndef GSMEFB_ERRORS_HPP
#define GSMEFB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gsmefb {

/// Invalid system/run configuration (bad antenna split, counts, ranges).
class ConfigError : public std::invalid_argument {
  public:
    explicit ConfigError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// Shape or size mismatch between operands.
class DimensionError : public std::invalid_argument {
  public:
    explicit DimensionError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// Numerical failure (non-PD covariance, singular system, non-finite value).
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Raw digital beamformer with (near-)zero transmit power; its normalization
/// divides by the Frobenius norm and is undefined.
class DegenerateBeamformerError : public NumericalError {
  public:
    explicit DegenerateBeamformerError(const std::string &msg) : NumericalError(msg) {}
};

/// API misuse (e.g. backward from a non-scalar node).
class UsageError : public std::logic_error {
  public:
    explicit UsageError(const std::string &msg) : std::logic_error(msg) {}
};

} // namespace gsmefb

#endif
