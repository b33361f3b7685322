/*
 * Copyright 2026 The wfk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WFK_ERRORS_HPP
#define WFK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wfk {

/// Parameter or argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested truncation tolerance needs more terms than the policy allows.
class InfeasibleTruncation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure (singular system, overflow of a reduction range, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wfk

#endif  // WFK_ERRORS_HPP
