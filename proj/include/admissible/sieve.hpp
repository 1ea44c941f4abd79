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

/* Primes, prime counting, and the Turan sieve applied to admissible
   polynomials.

   Turan's inequality, with U = sum_p delta_p over primes p < z,
   R_p = |A_p| - delta_p |A| and R_{p,q} = |A_p & A_q| - delta_p delta_q |A|:

       S(A, z) <= |A| / U + (2 / U) sum_p |R_p| + (1 / U^2) sum_{p,q} |R_{p,q}|

   The double sum runs over ordered pairs including p == q, where
   |A_p & A_p| = |A_p|. In the admissible application A_p is the set of
   polynomials irreducible mod p and delta_p = 1/n. */

#ifndef ADMISSIBLE_SIEVE_HPP
#define ADMISSIBLE_SIEVE_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <ranges>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "finite_field.hpp"
#include "integer_irreducibility.hpp"
#include "limits.hpp"
#include "numeric.hpp"
#include "polynomials.hpp"

namespace admissible {

inline constexpr std::uint64_t max_sieve_bound = 100'000'000;

namespace detail {

/* composite[i] for i <= n by the sieve of Eratosthenes */
inline std::vector<bool> composite_flags(std::uint64_t n) {
    if (n > max_sieve_bound) throw FeasibilityError(errors::oracle_too_large, "prime sieve bound too large");
    std::vector<bool> comp(n + 1, false);
    for (std::uint64_t i = 2; i * i <= n; ++i) {
        if (comp[i]) continue;
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return comp;
}

}  // namespace detail

/* All primes p < z, ascending. */
inline std::vector<std::uint64_t> primes_below(std::uint64_t z) {
    std::vector<std::uint64_t> out;
    if (z <= 2) return out;
    const auto comp = detail::composite_flags(z - 1);
    for (std::uint64_t i = 2; i < z; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

/* pi(z) = #{p <= z} */
inline std::uint64_t prime_pi(std::uint64_t z) { return primes_below(z + 1).size(); }

struct ChebyshevSample {
    std::uint64_t z = 0;
    std::uint64_t pi = 0;
    double ratio = 0;  // pi(z) log z / z
};

struct ChebyshevAudit {
    std::uint64_t z_max = 0;
    double window_lo = 0.9, window_hi = 1.3;
    std::uint64_t window_start = 17;
    ChebyshevSample min_all, max_all;        // over 3 <= z <= z_max
    std::optional<ChebyshevSample> min_window, max_window;  // over 17 <= z <= min(z_max, 10^6)
    std::vector<ChebyshevSample> checkpoints;  // powers of ten and z_max
    bool window_holds = true;
};

/* Evaluates pi(z) log z / z at every integer z in [3, z_max]. */
inline ChebyshevAudit audit_chebyshev(std::uint64_t z_max) {
    if (z_max < 3) throw DomainError(errors::invalid_argument, "chebyshev audit needs z_max >= 3");
    const auto comp = detail::composite_flags(z_max);
    ChebyshevAudit a;
    a.z_max = z_max;
    const std::uint64_t window_end = std::min<std::uint64_t>(z_max, 1'000'000);
    std::uint64_t pi = 1;  // pi(2)
    std::uint64_t next_checkpoint = 10;
    for (std::uint64_t z = 3; z <= z_max; ++z) {
        if (!comp[z]) ++pi;
        const ChebyshevSample s{z, pi, static_cast<double>(pi) * std::log(static_cast<double>(z)) / static_cast<double>(z)};
        if (z == 3 || s.ratio < a.min_all.ratio) a.min_all = s;
        if (z == 3 || s.ratio > a.max_all.ratio) a.max_all = s;
        if (z >= a.window_start && z <= window_end) {
            if (!a.min_window || s.ratio < a.min_window->ratio) a.min_window = s;
            if (!a.max_window || s.ratio > a.max_window->ratio) a.max_window = s;
            if (s.ratio < a.window_lo || s.ratio > a.window_hi) a.window_holds = false;
        }
        if (z == next_checkpoint || z == z_max) {
            a.checkpoints.push_back(s);
            if (z == next_checkpoint && next_checkpoint <= max_sieve_bound) next_checkpoint *= 10;
        }
    }
    return a;
}

class TuranInstance {
   public:
    BigCount ambient_size;
    std::uint64_t z = 0;
    std::vector<std::uint64_t> primes;
    std::map<std::uint64_t, Rational> densities;
    std::map<std::uint64_t, BigCount> member_counts;
    /* keyed (p, q) with p <= q; (p, p) holds |A_p| */
    std::map<std::pair<std::uint64_t, std::uint64_t>, BigCount> pair_counts;

    const BigCount& pair_count(std::uint64_t p, std::uint64_t q) const {
        return pair_counts.at(p <= q ? std::make_pair(p, q) : std::make_pair(q, p));
    }

    Rational remainder(std::uint64_t p) const { return Rational(member_counts.at(p)) - densities.at(p) * ambient_size; }

    Rational pair_remainder(std::uint64_t p, std::uint64_t q) const {
        return Rational(pair_count(p, q)) - densities.at(p) * densities.at(q) * ambient_size;
    }

    /* Throws DomainError when an instance invariant fails. */
    void validate() const {
        auto fail = [](const char* what) { throw DomainError(errors::invalid_argument, what); };
        for (auto p : primes) {
            const auto& d = densities.at(p);
            if (d < 0 || d >= 1) fail("density must lie in [0, 1)");
            if (member_counts.at(p) > ambient_size) fail("|A_p| exceeds |A|");
            for (auto q : primes) {
                const auto& pq = pair_count(p, q);
                if (pq > member_counts.at(p) || pq > member_counts.at(q)) fail("|A_p & A_q| exceeds min(|A_p|, |A_q|)");
            }
        }
        if (pair_counts.size() != primes.size() * (primes.size() + 1) / 2) fail("pair counts incomplete");
        for (auto p : primes)
            if (pair_count(p, p) != member_counts.at(p)) fail("|A_p & A_p| must equal |A_p|");
    }
};

struct TuranBoundTerms {
    Rational u;              // sum of densities
    Rational main;           // |A| / U
    Rational single;         // (2 / U) sum |R_p|
    Rational pairs;          // (1 / U^2) sum over ordered (p, q) of |R_{p,q}|
    Rational total;
};

inline TuranBoundTerms turan_bound_terms(const TuranInstance& inst) {
    inst.validate();
    TuranBoundTerms t;
    for (auto p : inst.primes) t.u += inst.densities.at(p);
    if (t.u == 0) throw DomainError(errors::empty_sieve, "U(z) = 0: no sifting primes or all densities zero");
    Rational sum_r = 0, sum_rr = 0;
    for (auto p : inst.primes) {
        sum_r += abs(inst.remainder(p));
        for (auto q : inst.primes) sum_rr += abs(inst.pair_remainder(p, q));
    }
    t.main = Rational(inst.ambient_size) / t.u;
    t.single = 2 * sum_r / t.u;
    t.pairs = sum_rr / (t.u * t.u);
    t.total = t.main + t.single + t.pairs;
    return t;
}

inline Rational turan_upper_bound(const TuranInstance& inst) { return turan_bound_terms(inst).total; }

/* Mod-p irreducibility testers for every prime below z, one bit each. */
class SiftingPrimes {
   public:
    /* expected_queries steers the table-versus-direct choice only */
    SiftingPrimes(std::size_t degree, std::uint64_t z, std::uint64_t expected_queries = 0) {
        for (auto p : primes_below(z)) testers_.emplace_back(degree, PrimeModulus(p), expected_queries);
        if (testers_.size() > 64) throw DomainError(errors::invalid_argument, "sieve level allows at most 64 primes");
    }

    /* bit i set iff the vector is irreducible mod the i-th prime */
    std::uint64_t membership(std::span<const std::int64_t> coeffs) const {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < testers_.size(); ++i)
            if (testers_[i].irreducible(coeffs)) mask |= std::uint64_t{1} << i;
        return mask;
    }

    std::size_t size() const noexcept { return testers_.size(); }
    std::uint64_t prime(std::size_t i) const { return testers_[i].p(); }

   private:
    std::vector<ModPIrreducibility> testers_;
};

/* Counts members reducible mod every prime p < z. `ambient` is any range
   of MonicIntPolynomial. */
template <class Range>
BigCount exact_sifted_count(const Range& ambient, std::uint64_t z) {
    std::uint64_t hint = 0;
    if constexpr (std::ranges::sized_range<const Range>) hint = static_cast<std::uint64_t>(std::ranges::size(ambient));
    std::map<std::size_t, SiftingPrimes> testers;
    std::uint64_t kept = 0;
    for (const MonicIntPolynomial& f : ambient) {
        auto it = testers.find(f.degree());
        if (it == testers.end()) it = testers.emplace(f.degree(), SiftingPrimes(f.degree(), z, hint)).first;
        if (it->second.membership(f.coeffs()) == 0) ++kept;
    }
    return kept;
}

/* Same count over the admissible set of (degree, height). */
inline BigCount exact_sifted_count(std::size_t degree, std::uint64_t height, std::uint64_t z, const Limits& limits = {}) {
    AdmissibleStream s(degree, height, limits.max_enum);
    SiftingPrimes sp(degree, z, static_cast<std::uint64_t>(s.size()));
    std::uint64_t kept = 0;
    while (s.next())
        if (sp.membership(s.coeffs()) == 0) ++kept;
    return kept;
}

/* Exact sieve data for the admissible set, from a single enumeration. */
struct PaperInstance {
    std::size_t degree = 0;
    std::uint64_t height = 0;
    TuranInstance instance;
    BigCount sifted;  // S(A, z), counted in the same pass
};

inline PaperInstance build_paper_instance(std::size_t degree, std::uint64_t height, std::uint64_t z,
                                          const Limits& limits = {}) {
    AdmissibleStream s(degree, height, limits.max_enum);
    SiftingPrimes sp(degree, z, static_cast<std::uint64_t>(s.size()));
    const std::size_t k = sp.size();
    std::vector<std::uint64_t> single(k, 0);
    std::vector<std::uint64_t> pairs(k * k, 0);
    std::uint64_t total = 0, kept = 0;

    while (s.next()) {
        ++total;
        const auto mask = sp.membership(s.coeffs());
        if (mask == 0) {
            ++kept;
            continue;
        }
        for (auto a = mask; a; a &= a - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(a));
            ++single[i];
            for (auto b = a & (a - 1); b; b &= b - 1) ++pairs[i * k + static_cast<std::size_t>(std::countr_zero(b))];
        }
    }

    PaperInstance out;
    out.degree = degree;
    out.height = height;
    out.sifted = kept;
    auto& inst = out.instance;
    inst.ambient_size = total;
    inst.z = z;
    for (std::size_t i = 0; i < k; ++i) {
        const auto p = sp.prime(i);
        inst.primes.push_back(p);
        inst.densities[p] = Rational(1, degree);
        inst.member_counts[p] = single[i];
        inst.pair_counts[{p, p}] = single[i];
        for (std::size_t j = i + 1; j < k; ++j) inst.pair_counts[{p, sp.prime(j)}] = pairs[i * k + j];
    }
    return out;
}

/* round(H^{1/3} (ln H)^{1/3}), half away from zero. */
inline std::uint64_t paper_z(std::uint64_t height) {
    if (height < 2) throw DomainError(errors::invalid_argument, "paper z needs height >= 2");
    const double h = static_cast<double>(height);
    return static_cast<std::uint64_t>(std::llround(std::cbrt(h) * std::cbrt(std::log(h))));
}

/* Asymptotic remainder shapes with unit constants, for display beside the
   exact remainders. */
inline double paper_remainder_shape(std::size_t degree, std::uint64_t height, std::uint64_t p) {
    const double h = static_cast<double>(height), n = static_cast<double>(degree), pp = static_cast<double>(p);
    return std::pow(h, n - 1) / std::pow(pp, n / 2) + std::pow(h, n - 2) * pp;
}

inline double paper_pair_remainder_shape(std::size_t degree, std::uint64_t height, std::uint64_t p, std::uint64_t q) {
    const double h = static_cast<double>(height), n = static_cast<double>(degree);
    const double pp = static_cast<double>(p), qq = static_cast<double>(q);
    return std::pow(h, n - 1) / std::pow(pp, n / 2) + std::pow(h, n - 1) / std::pow(qq, n / 2) + std::pow(h, n - 2) * pp * qq;
}

struct PrimeRemainder {
    std::uint64_t p = 0;
    BigCount members;       // |A_p|
    Rational exact;         // R_p
    double paper_shape = 0; // H^{n-1}/p^{n/2} + H^{n-2} p (approximate)
};

struct PipelineReport {
    std::size_t degree = 0;
    std::uint64_t height = 0;
    std::uint64_t z = 0;
    bool z_overridden = false;
    std::vector<std::uint64_t> primes;
    BigCount ambient;      // N(H)
    BigCount sifted;       // S_exact
    std::optional<TuranBoundTerms> bound;  // empty when no prime lies below z
    BigCount irreducible;  // A(H)
    BigCount reducible;    // N(H) - A(H)
    bool turan_holds = true;     // S_exact <= bound (vacuous for an empty sieve)
    bool chain_holds = true;     // A(H) >= N(H) - S_exact
    std::vector<PrimeRemainder> remainders;
    /* approximate reference magnitudes */
    double main_term = 0;   // H^{n-1} / (n-1)!
    double error_term = 0;  // H^{n-4/3} (ln H)^{2/3}
};

/* Runs the full sieve pipeline on the exact admissible set: sifted count,
   Turan bound with exact remainders, and the true A(H). Throws
   InvariantViolation when either theorem-backed inequality fails. */
inline PipelineReport pipeline_lower_bound(std::size_t degree, std::uint64_t height,
                                           std::optional<std::uint64_t> z_override = std::nullopt,
                                           const Limits& limits = {}) {
    if (degree < 3) throw DomainError(errors::invalid_argument, "pipeline needs degree >= 3");
    PipelineReport r;
    r.degree = degree;
    r.height = height;
    r.z_overridden = z_override.has_value();
    r.z = z_override ? *z_override : (height >= 2 ? paper_z(height) : 1);

    const auto pi = build_paper_instance(degree, height, r.z, limits);
    r.primes = pi.instance.primes;
    r.ambient = pi.instance.ambient_size;
    r.sifted = pi.sifted;
    if (!r.primes.empty()) {
        r.bound = turan_bound_terms(pi.instance);
        r.turan_holds = Rational(r.sifted) <= r.bound->total;
    }
    r.irreducible = count_admissible_irreducible(degree, height, limits);
    r.reducible = r.ambient - r.irreducible;
    r.chain_holds = r.irreducible >= r.ambient - r.sifted;

    for (auto p : r.primes)
        r.remainders.push_back({p, pi.instance.member_counts.at(p), pi.instance.remainder(p),
                                paper_remainder_shape(degree, height, p)});

    const double h = static_cast<double>(height), n = static_cast<double>(degree);
    r.main_term = std::pow(h, n - 1) / std::tgamma(n);
    r.error_term = height >= 1 ? std::pow(h, n - 4.0 / 3.0) * std::pow(std::log(h), 2.0 / 3.0) : 0.0;

    if (!r.turan_holds) throw InvariantViolation(errors::invariant_violation, "sifted count exceeds the Turan bound");
    if (!r.chain_holds) throw InvariantViolation(errors::invariant_violation, "A(H) < N(H) - S(A, z)");
    return r;
}

}  // namespace admissible

#endif
