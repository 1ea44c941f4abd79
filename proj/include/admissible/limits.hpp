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

#ifndef ADMISSIBLE_LIMITS_HPP
#define ADMISSIBLE_LIMITS_HPP

#include <cstdint>

namespace admissible {

/* Work limits shared by every feasibility-checked operation. */
struct Limits {
    std::uint64_t max_enum = 50'000'000;         // admissible enumeration size
    std::uint64_t max_oracle = 100'000'000;      // composition brute force, (cap+1)^parts
    std::uint64_t max_fp_oracle = 10'000'000;    // exhaustive F_p count, p^n
    std::uint64_t max_search = 1'000'000'000;    // factor candidates over Z
};

}  // namespace admissible

#endif
