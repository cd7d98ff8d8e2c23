// Copyright 2026 The qvc Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qvc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration value (qubit count, shots, gain constants, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A circuit was executed with unbound or mismatched angle slots.
class BindingError : public Error {
 public:
  using Error::Error;
};

/// A feature vector cannot be encoded (wrong length or outside [0, 1]).
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data: CSV defects, label problems, degenerate PCA input.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Non-finite objective value during optimization.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was violated. Indicates a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace qvc
