// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bscap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (NaN, negative order, rho > 1, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Argument sits on a pole of the gamma function.
class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Meijer-G parameter set without a pole-separating vertical contour, or otherwise malformed.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// An iterative or adaptive routine ran out of budget before meeting its tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// Valid parameters that the requested method cannot serve (rho = 1 on an analytic path).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// Invalid Monte Carlo or sweep configuration.
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace bscap
