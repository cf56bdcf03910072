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

#ifndef HOLEVO_ERRORS_HPP_
#define HOLEVO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace holevo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: dimension mismatches, out-of-range parameters,
/// unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The covariance does not describe a physical Gaussian state.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// The mean-coefficient rows are linearly dependent, so some parameter
/// combination is not imprinted on the probe.
class UnidentifiableParameterError : public Error {
 public:
  using Error::Error;
};

/// A numerical kernel failed (singular solve, failed factorization).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The optimizer matrix yields a singular reduced matrix F.
class DegenerateOptimizerError : public Error {
 public:
  using Error::Error;
};

/// A measurement plan does not satisfy the unbiasedness conditions.
class BiasedPlanError : public Error {
 public:
  using Error::Error;
};

}  // namespace holevo

#endif  // HOLEVO_ERRORS_HPP_
