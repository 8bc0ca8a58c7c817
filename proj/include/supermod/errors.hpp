// Copyright 2026 The supermod Authors
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

#ifndef SUPERMOD_ERRORS_HPP
#define SUPERMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace supermod {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cover relations close up into a cycle i < ... < i.
class CycleError : public Error {
 public:
  using Error::Error;
};

/// A player or coalition lies outside the poset / lattice.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (lattice size, chain count, ray count) was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

class NotComparableError : public Error {
 public:
  using Error::Error;
};

class EmptyCoalitionError : public Error {
 public:
  using Error::Error;
};

class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

class NotSupermodularError : public Error {
 public:
  using Error::Error;
};

/// A point configuration is not the payoff array of any 0-normalized game.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Two games bound to different lattices were combined.
class LatticeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or command-line value.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace supermod

#endif  // SUPERMOD_ERRORS_HPP
