/*  Copyright 2026 The relcat authors.

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License. */

#ifndef RELCAT_ERROR_HPP_
#define RELCAT_ERROR_HPP_

#include <stdexcept>

namespace relcat {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Domain/codomain mismatch: non-composable relations, non-parallel
/// operands, or a path whose endpoints do not line up.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// Reference to an element or object that does not exist.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// A scenario is missing an object, morphism, or designation that the
/// requested operation needs.
class DiagramError : public Error {
 public:
  using Error::Error;
};

}  // namespace relcat

#endif  // RELCAT_ERROR_HPP_
