// Copyright 2026 The lu2q Authors
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

namespace lu2q {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trace (or Hermiticity, when required) outside tolerance.
class NotAState : public Error {
 public:
  using Error::Error;
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

class NotRotation : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// One of the leading invariants is too close to zero to reconstruct a
/// section representative.
class DegenerateInvariants : public Error {
 public:
  using Error::Error;
};

}  // namespace lu2q
