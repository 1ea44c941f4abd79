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

#include <set>

#include "admissible/polynomials.hpp"
#include "oracles.hpp"

namespace {

using admissible::BigInt;
using admissible::MonicIntPolynomial;

std::vector<std::vector<std::int64_t>> drain(std::size_t n, std::uint64_t h) {
    std::vector<std::vector<std::int64_t>> out;
    auto s = admissible::enumerate_admissible(n, h);
    while (s.next()) out.emplace_back(s.coeffs().begin(), s.coeffs().end());
    return out;
}

TEST(Admissible, Predicate) {
    const std::vector<std::int64_t> a{1, 2, 2, 1}, b{1, 0, 1}, c{0, 0, 0, 1}, neg{10, -5, 0, 1};
    EXPECT_TRUE(admissible::is_admissible(a));
    EXPECT_TRUE(admissible::is_admissible(b));
    EXPECT_FALSE(admissible::is_admissible(c));
    EXPECT_TRUE(admissible::is_admissible(neg));  // signs are unrestricted
    const std::vector<std::int64_t> constant{7};
    EXPECT_THROW(admissible::is_admissible(constant), admissible::DomainError);
    EXPECT_TRUE(admissible::is_admissible(MonicIntPolynomial({1, 2, 2})));
}

TEST(Admissible, TargetSum) {
    EXPECT_EQ(admissible::target_sum(3), 5);
    EXPECT_EQ(admissible::target_sum(4), 23);
    EXPECT_EQ(admissible::target_sum(10), 3628799);
    EXPECT_EQ(admissible::target_sum(10), oracle::factorial(10) - 1);
    EXPECT_THROW(admissible::target_sum(0), admissible::DomainError);
}

TEST(Admissible, ExactCount) {
    EXPECT_EQ(admissible::count_admissible_exact(3, 6), 21);
    EXPECT_EQ(admissible::count_admissible_exact(3, 2), 3);
    EXPECT_EQ(admissible::count_admissible_exact(4, 5), 0);
    EXPECT_EQ(admissible::count_admissible_exact(4, 6), 4);
    EXPECT_EQ(admissible::count_admissible_exact(5, 120), BigInt(9078630));
    EXPECT_EQ(admissible::count_admissible_exact(5, 120), admissible::binomial(123, 4));
}

TEST(Admissible, PaperBounds) {
    EXPECT_EQ(admissible::paper_lower_bound(3, 6), 6);
    EXPECT_EQ(admissible::paper_lower_bound(3, 2), 0);
    EXPECT_EQ(admissible::paper_lower_bound(4, 10), 56);
    EXPECT_EQ(admissible::paper_upper_bound(3, 6), 153);
    EXPECT_EQ(admissible::paper_upper_bound(3, 2), 15);
    EXPECT_EQ(admissible::paper_upper_bound(3, 0), 0);
}

TEST(Enumeration, SmallStreams) {
    const std::vector<std::vector<std::int64_t>> want{{1, 2, 2}, {2, 1, 2}, {2, 2, 1}};
    EXPECT_EQ(drain(3, 2), want);
    EXPECT_TRUE(drain(3, 1).empty());
    EXPECT_EQ(drain(4, 6).size(), 4u);
}

TEST(Enumeration, MatchesOracleInOrder) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t h = 0; h <= static_cast<std::uint64_t>(oracle::factorial(static_cast<std::int64_t>(n))); ++h) {
            std::vector<std::vector<std::int64_t>> want;
            std::vector<std::int64_t> cur;
            oracle::collect_tuples(n, oracle::factorial(static_cast<std::int64_t>(n)) - 1, static_cast<std::int64_t>(h), cur, want);
            ASSERT_EQ(drain(n, h), want) << n << " " << h;
        }
}

TEST(Enumeration, LimitSignalsTooLarge) {
    EXPECT_THROW(admissible::enumerate_admissible(3, 6, 20), admissible::FeasibilityError);
    EXPECT_NO_THROW(admissible::enumerate_admissible(3, 6, 21));
}

TEST(Enumeration, Properties) {
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto hmax = static_cast<std::uint64_t>(std::min<std::int64_t>(oracle::factorial(static_cast<std::int64_t>(n)), 40));
        BigInt prev = 0;
        for (std::uint64_t h = 0; h <= hmax; ++h) {
            auto s = admissible::enumerate_admissible(n, h);
            std::uint64_t count = 0;
            std::vector<std::int64_t> last;
            while (s.next()) {
                std::vector<std::int64_t> cur(s.coeffs().begin(), s.coeffs().end());
                if (count) {
                    ASSERT_LT(last, cur);  // strictly increasing, no duplicates
                }
                for (auto c : cur) ASSERT_TRUE(c >= 0 && static_cast<std::uint64_t>(c) <= h);
                ASSERT_TRUE(admissible::is_admissible(s.current()));
                last = std::move(cur);
                ++count;
            }
            const auto exact = admissible::count_admissible_exact(n, h);
            ASSERT_EQ(exact, count);
            ASSERT_GE(exact, prev);  // nondecreasing in H
            prev = exact;
        }
    }
}

TEST(Admissible, SaturatesOnceCapStopsBinding) {
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto t = static_cast<std::uint64_t>(oracle::factorial(static_cast<std::int64_t>(n)) - 1);
        const auto sat = admissible::count_admissible_exact(n, t);
        EXPECT_EQ(admissible::count_admissible_exact(n, t + 1), sat);
        EXPECT_EQ(admissible::count_admissible_exact(n, t * 7), sat);
        EXPECT_EQ(sat, admissible::count_nonneg_compositions(n, t));
    }
}

TEST(Audit, KnownViolationAndClean) {
    auto r = admissible::audit_bounds(4, 5, 5);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].exact_count, 0);
    EXPECT_EQ(r[0].paper_lower, 1);
    EXPECT_TRUE(r[0].lower_violated);

    r = admissible::audit_bounds(3, 6, 6);
    EXPECT_EQ(r[0].exact_count, 21);
    EXPECT_EQ(r[0].paper_lower, 6);
    EXPECT_EQ(r[0].paper_upper, 153);
    EXPECT_FALSE(r[0].lower_violated);
    EXPECT_FALSE(r[0].upper_violated);
    EXPECT_EQ(*r[0].density_ratio, admissible::Rational(21, 36));

    r = admissible::audit_bounds(3, 0, 0);
    EXPECT_EQ(r[0].exact_count, 0);
    EXPECT_EQ(r[0].paper_lower, 0);
    EXPECT_EQ(r[0].paper_upper, 0);
    EXPECT_FALSE(r[0].lower_violated || r[0].upper_violated);
    EXPECT_FALSE(r[0].density_ratio.has_value());
}

TEST(Audit, FlagsMatchDefinitions) {
    for (std::size_t n = 3; n <= 5; ++n)
        for (const auto& r : admissible::audit_bounds(n, 0, static_cast<std::uint64_t>(oracle::factorial(static_cast<std::int64_t>(n))))) {
            EXPECT_EQ(r.lower_violated, r.paper_lower > r.exact_count);
            EXPECT_EQ(r.upper_violated, r.paper_upper < r.exact_count);
        }
}

TEST(Audit, Preconditions) {
    EXPECT_THROW(admissible::audit_bounds(2, 0, 1), admissible::DomainError);
    EXPECT_THROW(admissible::audit_bounds(3, 0, 7), admissible::DomainError);
    EXPECT_THROW(admissible::audit_bounds(3, 4, 3), admissible::DomainError);
}

TEST(Text, PolynomialForm) {
    EXPECT_EQ(admissible::to_text(MonicIntPolynomial({1, 2, 2})), "x^3 + 2x^2 + 2x + 1");
    EXPECT_EQ(admissible::to_text(MonicIntPolynomial({1, 0})), "x^2 + 1");
    EXPECT_EQ(admissible::to_text(MonicIntPolynomial({0, 0, 0})), "x^3");
    EXPECT_EQ(admissible::to_text(MonicIntPolynomial({1, -1, 0})), "x^3 - x + 1");
    EXPECT_EQ(admissible::to_text(MonicIntPolynomial({-3})), "x - 3");
    EXPECT_EQ(admissible::to_text(MonicIntPolynomial({0})), "x");
}

}  // namespace
