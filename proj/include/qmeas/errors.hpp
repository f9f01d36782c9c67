// Copyright 2026 The qmeas Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qmeas {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit together.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// An argument lies outside the domain of the operation (non-finite angle,
/// gamma outside [0,1], non-Hermitian observable, unknown label, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A computed quantity violated a numerical invariant it is supposed to hold
/// by construction (probability far below zero, failed self-check, ...).
class NumericError : public Error {
  public:
    using Error::Error;
};

/// Rejection of a candidate set of effects by `validate_povm`.
class PovmError : public NumericError {
  public:
    enum class Reason { NotHermitian, NotPositive, NotComplete };

    PovmError(Reason reason, double deviation, std::string what)
        : NumericError(std::move(what)), reason_(reason), deviation_(deviation) {}

    [[nodiscard]] Reason reason() const noexcept { return reason_; }
    /// Largest violation found, in the units of the failed check.
    [[nodiscard]] double deviation() const noexcept { return deviation_; }

  private:
    Reason reason_;
    double deviation_;
};

/// Malformed or incomplete experiment configuration. `field()` is the JSON
/// path of the offending entry, e.g. "arm1.gamma".
class ConfigError : public Error {
  public:
    ConfigError(std::string field, const std::string &message)
        : Error(field.empty() ? message : field + ": " + message),
          field_(std::move(field)) {}

    [[nodiscard]] const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace qmeas
