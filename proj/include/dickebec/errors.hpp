/* Copyright 2026 the dickebec authors
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

#ifndef DICKEBEC_ERRORS_HPP
#define DICKEBEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dickebec {

/// Model parameters violate the thermodynamic stability bound
/// lambda > g^2 / (8 omega).
class StabilityViolation : public std::domain_error {
 public:
  explicit StabilityViolation(const std::string& what)
      : std::domain_error(what) {}
};

/// A thermal integral or series diverges at the requested argument
/// (e.g. the free-gas density at mu = 0 in dimension nu <= 2).
class DivergenceError : public std::domain_error {
 public:
  explicit DivergenceError(const std::string& what)
      : std::domain_error(what) {}
};

/// A root bracket could not be established where monotonicity guarantees
/// one. Signals an internal inconsistency, not bad user input.
class BracketError : public std::runtime_error {
 public:
  explicit BracketError(const std::string& what)
      : std::runtime_error(what) {}
};

/// No stationary point exists at the requested chemical potential.
/// Cannot happen for stable parameters; signals an internal bug.
class NoCandidateError : public std::runtime_error {
 public:
  explicit NoCandidateError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A Fock-space truncation failed its certified weight cut.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A condensate amplitude came out with a negative radicand, meaning a
/// branch was evaluated outside its existence region.
class NegativeRadicandError : public std::domain_error {
 public:
  explicit NegativeRadicandError(const std::string& what)
      : std::domain_error(what) {}
};

}  // namespace dickebec

#endif  // DICKEBEC_ERRORS_HPP
