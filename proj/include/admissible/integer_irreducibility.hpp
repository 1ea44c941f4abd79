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

/* Exact irreducibility over Z for monic polynomials of small degree.

   Monic f is irreducible over Z iff it is over Q (Gauss), and a factor of a
   monic polynomial may be taken monic. The search is complete: any monic
   factor g of degree m obeys the Mignotte bound
       |g_i| <= C(m-1, i) * ||f||_2 + C(m-1, i-1)
   and its constant term divides a_0. */

#ifndef ADMISSIBLE_INTEGER_IRREDUCIBILITY_HPP
#define ADMISSIBLE_INTEGER_IRREDUCIBILITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "finite_field.hpp"
#include "limits.hpp"
#include "polynomials.hpp"

namespace admissible {

enum class Irreducibility { irreducible, reducible };

struct FactorizationWitness {
    Irreducibility status = Irreducibility::irreducible;
    /* (g, h) with g * h == f and 1 <= deg g <= deg h, when reducible */
    std::optional<std::pair<MonicIntPolynomial, MonicIntPolynomial>> factors;

    bool irreducible() const noexcept { return status == Irreducibility::irreducible; }
};

inline constexpr std::array<std::uint64_t, 6> probe_primes = {2, 3, 5, 7, 11, 13};

/* Product of two monic integer polynomials. Overflow is the caller's
   concern; desk-scale inputs stay far below 2^63. */
inline MonicIntPolynomial multiply(const MonicIntPolynomial& g, const MonicIntPolynomial& h) {
    auto a = g.with_leading();
    auto b = h.with_leading();
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    r.pop_back();
    return MonicIntPolynomial(std::move(r));
}

namespace detail {

inline BigInt ceil_sqrt(const BigInt& v) {
    BigInt r = boost::multiprecision::sqrt(v);
    if (r * r < v) ++r;
    return r;
}

/* Mignotte bounds for the coefficients 0..deg-1 of a monic degree-deg factor. */
inline std::vector<std::int64_t> mignotte_bounds(std::size_t deg, const BigInt& norm) {
    std::vector<std::int64_t> b(deg);
    for (std::size_t i = 0; i < deg; ++i) {
        const auto k = static_cast<std::int64_t>(deg) - 1;
        const auto ii = static_cast<std::int64_t>(i);
        BigInt v = binomial(BigInt(k), ii) * norm + binomial(BigInt(k), ii - 1);
        if (v > BigInt(std::int64_t{1} << 40))
            throw FeasibilityError(errors::search_space_exceeded, "coefficient bound out of range");
        b[i] = static_cast<std::int64_t>(v);
    }
    return b;
}

inline std::vector<std::int64_t> positive_divisors(std::uint64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d) continue;
        small.push_back(static_cast<std::int64_t>(d));
        if (d != n / d) large.push_back(static_cast<std::int64_t>(n / d));
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline __int128 eval(std::span<const std::int64_t> with_leading, std::int64_t x) {
    __int128 r = 0;
    for (std::size_t i = with_leading.size(); i-- > 0;) r = r * x + with_leading[i];
    return r;
}

/* f / g for monic f, g. Returns the quotient when the division is exact and
   every quotient coefficient respects `qbound`; nullopt otherwise. */
inline std::optional<std::vector<std::int64_t>> exact_quotient(std::span<const std::int64_t> f,
                                                               std::span<const std::int64_t> g,
                                                               std::span<const std::int64_t> qbound) {
    const std::size_t n = f.size() - 1, m = g.size() - 1;
    std::vector<__int128> rem(f.begin(), f.end());
    std::vector<std::int64_t> q(n - m + 1);
    for (std::size_t k = n + 1; k-- > m;) {
        const __int128 c = rem[k];
        const std::size_t i = k - m;
        if (i < n - m && (c > qbound[i] || c < -static_cast<__int128>(qbound[i]))) return std::nullopt;
        q[i] = static_cast<std::int64_t>(c);
        for (std::size_t j = 0; j <= m; ++j) rem[i + j] -= c * g[j];
    }
    for (std::size_t j = 0; j < m; ++j)
        if (rem[j] != 0) return std::nullopt;
    q.pop_back();  // leading 1
    return q;
}

}  // namespace detail

inline FactorizationWitness is_irreducible_over_z(const MonicIntPolynomial& f,
                                                  std::uint64_t max_search = Limits{}.max_search) {
    const std::size_t n = f.degree();
    if (n == 1) return {};
    if (f[0] == 0) {
        std::vector<std::int64_t> rest(f.coeffs().begin() + 1, f.coeffs().end());
        return {Irreducibility::reducible,
                std::make_pair(MonicIntPolynomial({0}), MonicIntPolynomial(std::move(rest)))};
    }

    for (auto p : probe_primes)
        if (is_irreducible_mod_p(reduce_mod_p(f, PrimeModulus(p)))) return {};

    const auto fl = f.with_leading();
    BigInt norm2 = 0;
    for (auto c : fl) norm2 += BigInt(c) * c;
    const BigInt norm = detail::ceil_sqrt(norm2);

    const auto a0 = f[0];
    const auto divisors = detail::positive_divisors(a0 < 0 ? 0 - static_cast<std::uint64_t>(a0) : static_cast<std::uint64_t>(a0));
    const __int128 f_at_1 = detail::eval(fl, 1), f_at_m1 = detail::eval(fl, -1);
    const auto compatible = [](__int128 fv, __int128 gv) { return gv == 0 ? fv == 0 : fv % gv == 0; };

    std::uint64_t tested = 0;
    for (std::size_t m = 1; m <= n / 2; ++m) {
        const auto gb = detail::mignotte_bounds(m, norm);
        const auto hb = detail::mignotte_bounds(n - m, norm);
        std::vector<std::int64_t> g(m + 1, 0);
        g[m] = 1;
        for (auto d : divisors) {
            if (d > gb[0]) break;
            for (std::int64_t g0 : {d, -d}) {
                g[0] = g0;
                // odometer over g_1..g_{m-1}, each in [-gb[i], gb[i]]
                for (std::size_t i = 1; i < m; ++i) g[i] = -gb[i];
                for (;;) {
                    if (++tested > max_search)
                        throw FeasibilityError(errors::search_space_exceeded,
                                               "factor search exceeded the configured candidate limit");
                    if (compatible(f_at_1, detail::eval(g, 1)) && compatible(f_at_m1, detail::eval(g, -1))) {
                        if (auto h = detail::exact_quotient(fl, g, hb)) {
                            std::vector<std::int64_t> gl(g.begin(), g.end() - 1);
                            return {Irreducibility::reducible,
                                    std::make_pair(MonicIntPolynomial(std::move(gl)), MonicIntPolynomial(std::move(*h)))};
                        }
                    }
                    std::size_t i = 1;
                    while (i < m && g[i] == gb[i]) {
                        g[i] = -gb[i];
                        ++i;
                    }
                    if (i >= m) break;
                    ++g[i];
                }
            }
        }
    }
    return {};
}

/* Per-polynomial verdict from an admissible enumeration. */
struct ClassifiedPolynomial {
    MonicIntPolynomial poly;
    FactorizationWitness witness;
};

inline std::vector<ClassifiedPolynomial> classify_admissible(std::size_t degree, std::uint64_t height,
                                                             const Limits& limits = {}) {
    std::vector<ClassifiedPolynomial> out;
    AdmissibleStream s(degree, height, limits.max_enum);
    while (s.next()) {
        auto f = s.current();
        auto w = is_irreducible_over_z(f, limits.max_search);
        out.push_back({std::move(f), std::move(w)});
    }
    return out;
}

/* A(H): admissible polynomials that are irreducible over Z. */
inline BigCount count_admissible_irreducible(std::size_t degree, std::uint64_t height, const Limits& limits = {}) {
    std::uint64_t hits = 0;
    AdmissibleStream s(degree, height, limits.max_enum);
    while (s.next())
        if (is_irreducible_over_z(s.current(), limits.max_search).irreducible()) ++hits;
    return hits;
}

}  // namespace admissible

#endif
