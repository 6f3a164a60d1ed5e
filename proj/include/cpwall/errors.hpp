// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace cpwall {

// Base of every error raised by the library. Anything deriving from Error
// is a numerical or contract failure of a well-formed request.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation exactly at a point where only a limit exists (t = 0 of f).
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

// Series or asymptotic evaluator called outside its regime.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Permittivity below 1, non-finite, or queried outside a tabulated range.
class ValidityError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, double best_estimate,
                      double error_estimate)
      : Error(what), best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

// The delta extrapolation did not fit: usually a misdeclared singularity.
class RegularizationError : public Error {
 public:
  using Error::Error;
};

class AccelerationError : public Error {
 public:
  using Error::Error;
};

class DivergentTailError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpwall
