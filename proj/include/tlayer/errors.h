// Copyright 2026 The tlayer Authors
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

namespace tlayer {

// Columns of different widths were combined.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Out-of-range or inconsistent parameters (generator params, k, f, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed circuit or merge-log document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The exact search refused an instance above its column cap.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A merge log does not replay against its input circuit.
class ReplayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tlayer
