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

#include <gtest/gtest.h>

#include "admissible/combinatorics.hpp"
#include "oracles.hpp"

namespace {

using admissible::BigInt;
using admissible::CompositionQuery;

TEST(Binomial, SmallValues) {
    EXPECT_EQ(admissible::binomial(5, 2), 10);
    EXPECT_EQ(admissible::binomial(4, 1), 4);
    EXPECT_EQ(admissible::binomial(3, 5), 0);
    EXPECT_EQ(admissible::binomial(3, -1), 0);
    EXPECT_EQ(admissible::binomial(0, 0), 1);
    EXPECT_EQ(admissible::binomial(-1, 0), 0);  // negative upper index
}

TEST(Binomial, LargeMatchesPascal) {
    auto tri = oracle::pascal(724);
    EXPECT_EQ(admissible::binomial(724, 5), tri[724][5]);
    EXPECT_EQ(admissible::binomial(724, 5), BigInt("1634935320144"));
    EXPECT_EQ(admissible::binomial(724, 362), tri[724][362]);
}

TEST(Binomial, PascalRuleUpTo200) {
    for (std::int64_t n = 1; n <= 200; ++n)
        for (std::int64_t k = 1; k <= n; ++k)
            ASSERT_EQ(admissible::binomial(n, k), admissible::binomial(n - 1, k - 1) + admissible::binomial(n - 1, k))
                << n << " " << k;
}

TEST(Binomial, HugeUpperIndex) {
    // C(10! + 2, 3) with a BigInt upper index
    BigInt n = BigInt(3628802);
    EXPECT_EQ(admissible::binomial(n, 3), n * (n - 1) * (n - 2) / 6);
}

TEST(Compositions, Positive) {
    EXPECT_EQ(admissible::count_positive_compositions(2, 5), 4);
    EXPECT_EQ(admissible::count_positive_compositions(3, 3), 1);
    EXPECT_EQ(admissible::count_positive_compositions(4, 3), 0);
    EXPECT_EQ(admissible::count_positive_compositions(1, 0), 0);
}

TEST(Compositions, Nonnegative) {
    EXPECT_EQ(admissible::count_nonneg_compositions(3, 2), 6);
    EXPECT_EQ(admissible::count_nonneg_compositions(1, 7), 1);
    EXPECT_EQ(admissible::count_nonneg_compositions(3, 5), 21);
    EXPECT_EQ(admissible::count_nonneg_compositions(3, 2), oracle::count_tuples(3, 2, 2));
    EXPECT_EQ(admissible::count_nonneg_compositions(3, 5), oracle::count_tuples(3, 5, 5));
}

TEST(Compositions, Bounded) {
    EXPECT_EQ(admissible::count_bounded_compositions({3, 5, BigInt(2)}), 3);
    EXPECT_EQ(admissible::count_bounded_compositions({3, 5, BigInt(5)}), 21);
    EXPECT_EQ(admissible::count_bounded_compositions({1, 7, BigInt(5)}), 0);
    EXPECT_EQ(admissible::count_bounded_compositions({4, 23, BigInt(10)}), 804);
    EXPECT_EQ(oracle::count_tuples(4, 23, 10), 804u);
    EXPECT_EQ(admissible::count_bounded_compositions({3, 5}), 21);  // unbounded
}

TEST(Compositions, BruteForce) {
    EXPECT_EQ(admissible::brute_force_compositions({3, 5, BigInt(2)}), 3);
    EXPECT_EQ(admissible::brute_force_compositions({2, 0, BigInt(0)}), 1);
    EXPECT_EQ(admissible::brute_force_compositions({3, 10, BigInt(2)}), 0);
}

TEST(Compositions, BruteForceLimit) {
    EXPECT_THROW(admissible::brute_force_compositions({5, 10, BigInt(99)}, 1000), admissible::FeasibilityError);
    EXPECT_NO_THROW(admissible::brute_force_compositions({3, 10, BigInt(9)}, 1000));
    try {
        admissible::brute_force_compositions({5, 10, BigInt(99)}, 1000);
    } catch (const admissible::FeasibilityError& e) {
        EXPECT_EQ(e.kind(), "oracle_too_large");
    }
}

TEST(Compositions, QueryInvariants) {
    EXPECT_THROW(CompositionQuery(0, 1), admissible::DomainError);
    EXPECT_THROW(CompositionQuery(1, -1), admissible::DomainError);
    EXPECT_THROW(CompositionQuery(1, 1, BigInt(-1)), admissible::DomainError);
}

TEST(CompositionProperties, BoundedEqualsOracleOnSmallGrid) {
    for (std::uint64_t n = 1; n <= 5; ++n)
        for (std::int64_t s = 0; s <= 30; ++s)
            for (std::int64_t h = 0; h <= 12; ++h)
                ASSERT_EQ(admissible::count_bounded_compositions({n, s, BigInt(h)}), oracle::count_tuples(n, s, h))
                    << n << " " << s << " " << h;
}

TEST(CompositionProperties, CapAboveTargetIsUnbounded) {
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::uint64_t>(oracle::uniform(1, 12));
        const auto s = oracle::uniform(0, 5000);
        const auto h = s + oracle::uniform(0, 100);
        ASSERT_EQ(admissible::count_bounded_compositions({n, s, BigInt(h)}), admissible::count_nonneg_compositions(n, s));
    }
}

TEST(CompositionProperties, PositiveIsShiftedNonnegative) {
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::uint64_t>(oracle::uniform(1, 15));
        const auto k = static_cast<std::int64_t>(n) + oracle::uniform(0, 1000);
        ASSERT_EQ(admissible::count_positive_compositions(n, k),
                  admissible::count_nonneg_compositions(n, k - static_cast<std::int64_t>(n)));
    }
}

TEST(CompositionProperties, ComplementSymmetry) {
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::uint64_t>(oracle::uniform(1, 8));
        const auto h = oracle::uniform(0, 40);
        const auto s = oracle::uniform(0, static_cast<std::int64_t>(n) * h);
        ASSERT_EQ(admissible::count_bounded_compositions({n, s, BigInt(h)}),
                  admissible::count_bounded_compositions({n, static_cast<std::int64_t>(n) * h - s, BigInt(h)}));
    }
}

}  // namespace
