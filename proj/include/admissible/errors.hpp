/*
   Copyright 2026 The admissible-poly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ADMISSIBLE_ERRORS_HPP
#define ADMISSIBLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace admissible {

/* Base of every error the toolkit signals. `kind()` is a stable
   machine-readable tag used in CLI error objects. */
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

   private:
    std::string kind_;
};

/* Invalid argument for an otherwise well-formed request: degree zero,
   composite modulus, zero divisor, empty sieve, ... */
class DomainError : public Error {
   public:
    using Error::Error;
};

/* A configured work limit would be exceeded: oracle too large,
   enumeration too large, search space exceeded. */
class FeasibilityError : public Error {
   public:
    using Error::Error;
};

/* A theorem-backed inequality failed. Indicates a defect, never expected. */
class InvariantViolation : public Error {
   public:
    using Error::Error;
};

namespace errors {
inline constexpr const char* degree_zero = "degree_zero";
inline constexpr const char* not_prime = "not_prime";
inline constexpr const char* zero_divisor = "zero_divisor";
inline constexpr const char* modulus_mismatch = "modulus_mismatch";
inline constexpr const char* empty_sieve = "empty_sieve";
inline constexpr const char* invalid_argument = "invalid_argument";
inline constexpr const char* oracle_too_large = "oracle_too_large";
inline constexpr const char* enumeration_too_large = "enumeration_too_large";
inline constexpr const char* search_space_exceeded = "search_space_exceeded";
inline constexpr const char* invariant_violation = "invariant_violation";
}  // namespace errors

}  // namespace admissible

#endif
