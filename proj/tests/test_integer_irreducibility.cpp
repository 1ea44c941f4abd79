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

#include "admissible/integer_irreducibility.hpp"
#include "oracles.hpp"

namespace {

using admissible::MonicIntPolynomial;

void expect_sound(const MonicIntPolynomial& f, const admissible::FactorizationWitness& w) {
    if (w.irreducible()) {
        EXPECT_FALSE(w.factors.has_value());
        return;
    }
    ASSERT_TRUE(w.factors.has_value());
    const auto& [g, h] = *w.factors;
    EXPECT_EQ(admissible::multiply(g, h), f);
    EXPECT_EQ(g.degree() + h.degree(), f.degree());
    EXPECT_GE(g.degree(), 1u);
    EXPECT_LE(g.degree(), h.degree());
}

TEST(OverZ, Examples) {
    const MonicIntPolynomial f({1, 2, 2});
    auto w = admissible::is_irreducible_over_z(f);
    ASSERT_FALSE(w.irreducible());
    EXPECT_EQ(w.factors->first, MonicIntPolynomial({1}));
    EXPECT_EQ(w.factors->second, MonicIntPolynomial({1, 1}));
    EXPECT_EQ(admissible::to_text(w.factors->first), "x + 1");
    EXPECT_EQ(admissible::to_text(w.factors->second), "x^2 + x + 1");

    EXPECT_TRUE(admissible::is_irreducible_over_z(MonicIntPolynomial({1, 3, 1})).irreducible());
    EXPECT_TRUE(admissible::is_irreducible_over_z(MonicIntPolynomial({1, 0})).irreducible());

    const MonicIntPolynomial x4({0, 0, 0, 0});
    w = admissible::is_irreducible_over_z(x4);
    ASSERT_FALSE(w.irreducible());
    EXPECT_EQ(w.factors->first, MonicIntPolynomial({0}));
    EXPECT_EQ(w.factors->second, MonicIntPolynomial({0, 0, 0}));
}

TEST(OverZ, NoRootsButReducible) {
    // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2); reducible mod every prime
    const MonicIntPolynomial f({4, 0, 0, 0});
    auto w = admissible::is_irreducible_over_z(f);
    ASSERT_FALSE(w.irreducible());
    expect_sound(f, w);
    EXPECT_EQ(w.factors->first.degree(), 2u);
    // x^4 + 1 is irreducible over Z but reducible mod every prime
    EXPECT_TRUE(admissible::is_irreducible_over_z(MonicIntPolynomial({1, 0, 0, 0})).irreducible());
}

TEST(OverZ, DegreeOneAlwaysIrreducible) {
    for (std::int64_t c = -50; c <= 50; ++c)
        EXPECT_TRUE(admissible::is_irreducible_over_z(MonicIntPolynomial({c})).irreducible());
}

TEST(OverZ, SearchLimit) {
    // x^4 + 1 passes no probe prime, so the complete search runs
    EXPECT_THROW(admissible::is_irreducible_over_z(MonicIntPolynomial({1, 0, 0, 0}), 3), admissible::FeasibilityError);
}

TEST(OverZ, AgreesWithBoxOracleUpToDegreeFour) {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::int64_t> c(n, 0);
        for (;;) {
            const MonicIntPolynomial f(c);
            auto w = admissible::is_irreducible_over_z(f);
            auto full = c;
            full.push_back(1);
            ASSERT_EQ(!w.irreducible(), oracle::reducible_by_box_search(full)) << admissible::to_text(f);
            expect_sound(f, w);
            std::size_t i = 0;
            while (i < n && c[i] == 10) c[i++] = 0;
            if (i == n) break;
            ++c[i];
        }
    }
}

TEST(OverZ, ConsistentWithFiniteFields) {
    for (int trial = 0; trial < 2000; ++trial) {
        const auto n = static_cast<std::size_t>(oracle::uniform(2, 6));
        std::vector<std::int64_t> c(n);
        for (auto& v : c) v = oracle::uniform(-20, 20);
        const MonicIntPolynomial f(c);
        auto w = admissible::is_irreducible_over_z(f);
        expect_sound(f, w);
        for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u})
            if (admissible::is_irreducible_mod_p(admissible::reduce_mod_p(f, p))) {
                ASSERT_TRUE(w.irreducible());
            }
    }
}

TEST(OverZ, WitnessSoundOnProducts) {
    for (int trial = 0; trial < 500; ++trial) {
        const auto m = static_cast<std::size_t>(oracle::uniform(1, 3));
        const auto k = static_cast<std::size_t>(oracle::uniform(m, 3));
        std::vector<std::int64_t> a(m), b(k);
        for (auto& v : a) v = oracle::uniform(-6, 6);
        for (auto& v : b) v = oracle::uniform(-6, 6);
        const auto f = admissible::multiply(MonicIntPolynomial(a), MonicIntPolynomial(b));
        auto w = admissible::is_irreducible_over_z(f);
        ASSERT_FALSE(w.irreducible()) << admissible::to_text(f);
        expect_sound(f, w);
    }
}

TEST(AdmissibleIrreducible, Counts) {
    // golden values, cross-checked with an external CAS factorization
    EXPECT_EQ(admissible::count_admissible_irreducible(3, 2), 0);
    EXPECT_EQ(admissible::count_admissible_irreducible(3, 1), 0);
    EXPECT_EQ(admissible::count_admissible_irreducible(3, 6), 10);
    EXPECT_EQ(admissible::count_admissible_irreducible(4, 6), 2);
    EXPECT_EQ(admissible::count_admissible_irreducible(4, 24), 2041);
}

TEST(AdmissibleIrreducible, BoundedByN) {
    for (std::size_t n = 3; n <= 4; ++n)
        for (std::uint64_t h = 0; h <= static_cast<std::uint64_t>(oracle::factorial(static_cast<std::int64_t>(n))); h += 3)
            EXPECT_LE(admissible::count_admissible_irreducible(n, h), admissible::count_admissible_exact(n, h));
}

TEST(AdmissibleIrreducible, ClassifyWitnesses) {
    auto all = admissible::classify_admissible(3, 6);
    ASSERT_EQ(all.size(), 21u);
    std::size_t irreducible = 0;
    for (const auto& c : all) {
        expect_sound(c.poly, c.witness);
        irreducible += c.witness.irreducible();
    }
    EXPECT_EQ(irreducible, 10u);
}

}  // namespace
