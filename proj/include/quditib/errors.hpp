// Copyright 2026 The qudit-ib Authors
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

namespace quditib {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ring arithmetic.
class InvalidRing : public Error { using Error::Error; };
class ShapeError : public Error { using Error::Error; };

class UnsupportedDimension : public Error { using Error::Error; };

/// The group pipeline produced something that is not closed or not consistent.
class ConstructionError : public Error { using Error::Error; };
class EnumerationCapExceeded : public Error { using Error::Error; };

class CptpViolation : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };

/// Twirled superoperator does not have the 1 + eta0 + eta_plus block pattern.
class StructureViolation : public Error { using Error::Error; };
class NumericalIntegrityError : public Error { using Error::Error; };

// Input handling. Both carry enough context (field, line) to be printed as is.
class IoError : public Error { using Error::Error; };
class SchemaError : public Error { using Error::Error; };

}  // namespace quditib
