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

#ifndef ADMISSIBLE_NUMERIC_HPP
#define ADMISSIBLE_NUMERIC_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace admissible {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* Nonnegative arbitrary-precision count. */
using BigCount = BigInt;

inline BigInt factorial(std::uint64_t n) {
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt ipow(const BigInt& base, std::uint64_t e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline std::string to_string(const BigInt& v) { return v.str(); }

/* true iff v fits a signed 64-bit integer */
inline bool fits_int64(const BigInt& v) {
    return v >= BigInt(std::numeric_limits<std::int64_t>::min()) &&
           v <= BigInt(std::numeric_limits<std::int64_t>::max());
}

}  // namespace admissible

#endif
