// Copyright 2026 The trisep Authors
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

namespace trisep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller-supplied parameter outside its domain (u <= 0, bad weights, ...).
class BadParameter : public Error {
 public:
  using Error::Error;
};

class BadDimension : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// Matrix has mass outside the diagonal/anti-diagonal X pattern.
class NotXShaped : public Error {
 public:
  using Error::Error;
};

class NonRealPairing : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class BadTriple : public Error {
 public:
  using Error::Error;
};

class SingularGram : public Error {
 public:
  using Error::Error;
};

/// Input is not a density matrix (not PSD or trace != 1).
class NotAState : public Error {
 public:
  using Error::Error;
};

class BadEndpoints : public Error {
 public:
  using Error::Error;
};

class EmptyFacet : public Error {
 public:
  using Error::Error;
};

/// A JSON document that does not have the expected shape.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

}  // namespace trisep
