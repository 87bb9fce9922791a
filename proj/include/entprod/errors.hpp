// Copyright 2026 The entprod Authors
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

namespace entprod {

/** Operand shapes do not fit the requested operation. */
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string &what)
      : std::invalid_argument(what) {}
};

/** A matrix entry was NaN or infinite. */
class NonFiniteEntry : public std::invalid_argument {
 public:
  explicit NonFiniteEntry(const std::string &what)
      : std::invalid_argument(what) {}
};

/** Input expected to be Hermitian exceeded the asymmetry tolerance. */
class NonHermitianInput : public std::domain_error {
 public:
  explicit NonHermitianInput(const std::string &what)
      : std::domain_error(what) {}
};

/**
 * The operator trace is zero (relative to its norm), so the
 * non-entangling counterpart and the production measure are undefined.
 */
class ZeroTrace : public std::domain_error {
 public:
  explicit ZeroTrace(const std::string &what) : std::domain_error(what) {}
};

/** A model without interaction was asked for interaction-dependent data. */
class NoInteraction : public std::invalid_argument {
 public:
  explicit NoInteraction(const std::string &what)
      : std::invalid_argument(what) {}
};

}  // namespace entprod
