// Copyright 2026 The entfact Authors
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

namespace entfact {

// Base type for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfRangeError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct NotHermitianError : Error { using Error::Error; };
struct NoConvergenceError : Error { using Error::Error; };
struct NotPSDError : Error { using Error::Error; };
struct ZeroProbabilityError : Error { using Error::Error; };
struct InvalidStateError : Error { using Error::Error; };
struct NotMonotonicError : Error { using Error::Error; };
struct NoRootError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct UnknownFamilyError : Error { using Error::Error; };

}  // namespace entfact
