// Copyright 2026 The esdlab Authors
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

namespace esdlab {

// Base of every error raised by the library. Each subclass corresponds to one
// failure mode so callers (the CLI in particular) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NormalizationError : public Error { public: using Error::Error; };
class NegativeParameter : public Error { public: using Error::Error; };
class ModelParameterError : public Error { public: using Error::Error; };
class FormError : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class NumericalError : public Error { public: using Error::Error; };
class NoESD : public Error { public: using Error::Error; };
class GridTooCoarse : public Error { public: using Error::Error; };

// Integrator failures.
class IntegrationError : public Error { public: using Error::Error; };
class StepSizeUnderflow : public IntegrationError { public: using IntegrationError::IntegrationError; };
class DiagnosticsExceeded : public IntegrationError { public: using IntegrationError::IntegrationError; };

}  // namespace esdlab
