// Copyright 2026 The odprof Authors
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

namespace odprof {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values of different column types were compared.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or traversal guard was exceeded.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// CSV ingestion failed. The message names the offending location.
class LoadError : public Error {
 public:
  using Error::Error;
};

/// A dependency string or attribute name could not be resolved.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A dependency was asked about that does not hold on the table.
class UnknownDependencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace odprof
