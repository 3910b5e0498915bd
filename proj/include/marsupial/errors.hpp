// Copyright 2026 The Marsupial Sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace marsupial {

// Base class for all simulator errors.
class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested cable length is shorter than the anchor separation.
class LengthTooShortError : public SimError {
 public:
  using SimError::SimError;
};

// An iterative solver exhausted its iteration budget.
class NumericalFailureError : public SimError {
 public:
  using SimError::SimError;
};

// Configuration file errors. Maps to CLI exit code 2.
class ConfigError : public SimError {
 public:
  using SimError::SimError;
};

// Input text could not be parsed at all.
class ParseError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Input parsed but violates the schema; message names the offending field.
class SchemaError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Parameter set violates a model invariant.
class InvalidParamsError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Scenario ended before all targets were reached. Maps to CLI exit code 1.
class TimeoutError : public SimError {
 public:
  using SimError::SimError;
};

// A state magnitude exceeded the divergence guard. Maps to CLI exit code 3.
class DivergenceError : public SimError {
 public:
  using SimError::SimError;
};

class IoError : public SimError {
 public:
  using SimError::SimError;
};

}  // namespace marsupial
