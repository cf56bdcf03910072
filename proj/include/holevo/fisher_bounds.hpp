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

// SLD and RLD Cramer-Rao bounds for estimating the mean of a Gaussian probe.

#ifndef HOLEVO_FISHER_BOUNDS_HPP_
#define HOLEVO_FISHER_BOUNDS_HPP_

#include <optional>

#include "holevo/gaussian_model.hpp"

namespace holevo {

struct SldBound {
  MatrixXd fisher;  ///< G^(S) = M M^T
  double bound;     ///< Tr (G^(S))^{-1}
};

struct RldBound {
  /// G^(R) = M C M^T. Empty when the probe has pure directions that the
  /// parameters couple to; the RLD information is unbounded there.
  std::optional<MatrixXcd> fisher;
  /// (G^(R))^{-1}; well defined in both cases (limit along the pure directions).
  MatrixXcd inverse;
  double bound;  ///< Tr Re (G^(R))^{-1} + TrAbs Im (G^(R))^{-1}
};

struct FisherResult {
  MatrixXd g_sld;
  std::optional<MatrixXcd> g_rld;
  MatrixXcd g_rld_inverse;
  double c_sld = 0.0;
  double c_rld = 0.0;
};

SldBound sld_bound(const EuclideanFrame& frame);
RldBound rld_bound(const EuclideanFrame& frame);
FisherResult fisher_bounds(const EuclideanFrame& frame);

}  // namespace holevo

#endif  // HOLEVO_FISHER_BOUNDS_HPP_
