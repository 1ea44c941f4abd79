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

/* Exact counting of integer compositions.

   Two conventions are kept apart on purpose: a *positive* composition of K
   into n parts has every part >= 1 and there are C(K-1, n-1) of them; a
   *nonnegative* composition allows zero parts and there are C(K+n-1, n-1).
   Capped (bounded) compositions are counted by inclusion-exclusion over the
   parts that overflow the cap. */

#ifndef ADMISSIBLE_COMBINATORICS_HPP
#define ADMISSIBLE_COMBINATORICS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace admissible {

inline constexpr std::uint64_t default_oracle_limit = 100'000'000;

/* (parts, target, cap): ordered tuples (a_1..a_parts) with sum == target
   and 0 <= a_i <= cap. An empty cap means unbounded. */
class CompositionQuery {
   public:
    CompositionQuery(std::uint64_t parts, BigInt target, std::optional<BigInt> cap = std::nullopt)
        : parts_(parts), target_(std::move(target)), cap_(std::move(cap)) {
        if (parts_ < 1) throw DomainError(errors::invalid_argument, "composition needs at least one part");
        if (target_ < 0) throw DomainError(errors::invalid_argument, "composition target must be nonnegative");
        if (cap_ && *cap_ < 0) throw DomainError(errors::invalid_argument, "composition cap must be nonnegative");
    }

    std::uint64_t parts() const noexcept { return parts_; }
    const BigInt& target() const noexcept { return target_; }
    const std::optional<BigInt>& cap() const noexcept { return cap_; }
    bool bounded() const noexcept { return cap_.has_value(); }

   private:
    std::uint64_t parts_;
    BigInt target_;
    std::optional<BigInt> cap_;
};

/* C(n, k). Zero when k < 0 or k > n, and zero for a negative upper index
   so that inclusion-exclusion sums stay total. */
inline BigCount binomial(const BigInt& n, std::int64_t k) {
    if (n < 0 || k < 0 || BigInt(k) > n) return 0;
    BigInt kk = std::min<BigInt>(BigInt(k), n - k);
    auto steps = static_cast<std::uint64_t>(kk);
    BigInt r = 1;
    for (std::uint64_t i = 0; i < steps; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline BigCount binomial(std::int64_t n, std::int64_t k) { return binomial(BigInt(n), k); }

/* Ordered sums of `parts` integers >= 1 equal to target: C(target-1, parts-1). */
inline BigCount count_positive_compositions(std::uint64_t parts, const BigInt& target) {
    CompositionQuery q(parts, target);
    return binomial(target - 1, static_cast<std::int64_t>(parts - 1));
}

/* Ordered sums of `parts` integers >= 0 equal to target: C(target+parts-1, parts-1). */
inline BigCount count_nonneg_compositions(std::uint64_t parts, const BigInt& target) {
    CompositionQuery q(parts, target);
    return binomial(target + parts - 1, static_cast<std::int64_t>(parts - 1));
}

inline BigCount count_bounded_compositions(const CompositionQuery& q) {
    const auto n = static_cast<std::int64_t>(q.parts());
    if (!q.bounded() || *q.cap() >= q.target()) return count_nonneg_compositions(q.parts(), q.target());

    const BigInt step = *q.cap() + 1;
    BigInt total = 0;
    BigInt rest = q.target();
    for (std::int64_t j = 0; j <= n && rest >= 0; ++j, rest -= step) {
        BigInt term = binomial(BigInt(n), j) * binomial(rest + n - 1, n - 1);
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

/* Exhaustive oracle: walks every tuple in [0, cap]^parts. An unbounded
   query is walked with cap = target. Throws FeasibilityError when
   (cap+1)^parts exceeds `limit`. */
inline BigCount brute_force_compositions(const CompositionQuery& q, std::uint64_t limit = default_oracle_limit) {
    const BigInt cap = q.bounded() ? *q.cap() : q.target();
    if (ipow(cap + 1, q.parts()) > limit)
        throw FeasibilityError(errors::oracle_too_large, "composition oracle exceeds the configured limit");

    // Both fit in 64 bits now: (cap+1)^parts <= limit.
    const auto c = static_cast<std::uint64_t>(cap);
    if (q.target() > BigInt(c) * q.parts()) return 0;
    const auto target = static_cast<std::uint64_t>(q.target());

    std::vector<std::uint64_t> tuple(q.parts(), 0);
    std::uint64_t sum = 0, hits = 0;
    for (;;) {
        if (sum == target) ++hits;
        std::size_t i = 0;
        while (i < tuple.size() && tuple[i] == c) {
            sum -= tuple[i];
            tuple[i++] = 0;
        }
        if (i == tuple.size()) break;
        ++tuple[i];
        ++sum;
    }
    return hits;
}

}  // namespace admissible

#endif
