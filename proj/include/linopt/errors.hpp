// Copyright 2026 The linopt Authors
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

#ifndef LINOPT_ERRORS_HPP
#define LINOPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linopt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix expected to be unitary failed the unitarity test.
class NonUnitaryInput : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be antihermitian failed the antihermiticity test.
class NotAntihermitian : public Error {
 public:
  using Error::Error;
};

/// Shapes or sizes do not match the operation's contract.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An integer result does not fit in 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace linopt

#endif  // LINOPT_ERRORS_HPP
