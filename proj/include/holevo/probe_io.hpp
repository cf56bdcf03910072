// Copyright 2026 The holevo-gauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON probe files.
//
//   { "modes": n, "params": l, "ordering": "yx-interleaved",
//     "covariance": [[...2n x 2n...]], "mean_coeffs": [[...l x 2n...]] }
//
// Units: [Q, P] = i, vacuum variance 1/2.

#ifndef HOLEVO_PROBE_IO_HPP_
#define HOLEVO_PROBE_IO_HPP_

#include <string>

#include "holevo/gaussian_model.hpp"

namespace holevo {

inline constexpr const char* kProbeOrdering = "yx-interleaved";

/// Parses and validates a probe. Throws InputError with a description of
/// the first problem found, or the model's own validation errors.
ProbeModel parse_probe(const std::string& text);

/// Reads a probe file; unreadable paths raise InputError.
ProbeModel load_probe(const std::string& path);

/// Serializes with 17 significant digits so that parse_probe round-trips.
std::string probe_to_json(const ProbeModel& model);

}  // namespace holevo

#endif  // HOLEVO_PROBE_IO_HPP_
