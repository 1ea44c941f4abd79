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

/* Polynomial arithmetic over F_p and irreducibility over prime fields.

   Irreducibility uses Rabin's criterion: a monic f of degree n is
   irreducible over F_p iff x^(p^n) == x (mod f) and
   gcd(x^(p^(n/q)) - x, f) == 1 for every prime q dividing n.
   Moduli are restricted to p < 2^32 so residue products fit in 64 bits. */

#ifndef ADMISSIBLE_FINITE_FIELD_HPP
#define ADMISSIBLE_FINITE_FIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "limits.hpp"
#include "numeric.hpp"
#include "polynomials.hpp"

namespace admissible {

/* Deterministic trial division. */
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

/* A validated prime modulus. */
class PrimeModulus {
   public:
    explicit PrimeModulus(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t{1} << 32))
            throw DomainError(errors::invalid_argument, "modulus " + std::to_string(p) + " exceeds 2^32");
        if (!is_prime(p)) throw DomainError(errors::not_prime, std::to_string(p) + " is not prime");
    }
    std::uint64_t value() const noexcept { return p_; }
    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

   private:
    std::uint64_t p_;
};

class PrimeFieldPolynomial {
   public:
    /* Zero polynomial. */
    explicit PrimeFieldPolynomial(PrimeModulus p) : p_(p) {}

    /* coeffs low to high; every residue must lie in [0, p). Trailing zeros
       are dropped so the leading residue is nonzero. */
    PrimeFieldPolynomial(PrimeModulus p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        for (auto r : c_)
            if (r >= p_.value()) throw DomainError(errors::invalid_argument, "residue out of range");
        trim();
    }

    /* Reduces arbitrary signed integers into [0, p). */
    static PrimeFieldPolynomial from_integers(PrimeModulus p, std::span<const std::int64_t> coeffs) {
        const auto m = static_cast<std::int64_t>(p.value());
        std::vector<std::uint64_t> c(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = static_cast<std::uint64_t>(((coeffs[i] % m) + m) % m);
        return PrimeFieldPolynomial(p, std::move(c));
    }

    static PrimeFieldPolynomial x(PrimeModulus p) { return PrimeFieldPolynomial(p, {0, 1}); }
    static PrimeFieldPolynomial constant(PrimeModulus p, std::uint64_t r) { return PrimeFieldPolynomial(p, {r % p.value()}); }

    PrimeModulus modulus() const noexcept { return p_; }
    std::uint64_t p() const noexcept { return p_.value(); }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /* -1 for the zero polynomial */
    std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
    std::uint64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return leading() == 1; }
    std::uint64_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    friend bool operator==(const PrimeFieldPolynomial&, const PrimeFieldPolynomial&) = default;

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    PrimeModulus p_;
    std::vector<std::uint64_t> c_;
};

inline std::string to_text(const PrimeFieldPolynomial& f) {
    return polynomial_text(std::span<const std::uint64_t>(f.coeffs()));
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline void check_same(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& b) {
    if (a.p() != b.p()) throw DomainError(errors::modulus_mismatch, "operands have different moduli");
}

}  // namespace detail

inline PrimeFieldPolynomial fp_add(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& b) {
    detail::check_same(a, b);
    const auto p = a.p();
    std::vector<std::uint64_t> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return {a.modulus(), std::move(r)};
}

inline PrimeFieldPolynomial fp_sub(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& b) {
    detail::check_same(a, b);
    const auto p = a.p();
    std::vector<std::uint64_t> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + p - b[i]) % p;
    return {a.modulus(), std::move(r)};
}

inline PrimeFieldPolynomial fp_mul(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& b) {
    detail::check_same(a, b);
    if (a.is_zero() || b.is_zero()) return PrimeFieldPolynomial(a.modulus());
    const auto p = a.p();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<std::uint64_t> r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = (r[i + j] + detail::mulmod(x[i], y[j], p)) % p;
    }
    return {a.modulus(), std::move(r)};
}

/* (quotient, remainder) of a / b. */
inline std::pair<PrimeFieldPolynomial, PrimeFieldPolynomial> fp_divmod(const PrimeFieldPolynomial& a,
                                                                     const PrimeFieldPolynomial& b) {
    detail::check_same(a, b);
    if (b.is_zero()) throw DomainError(errors::zero_divisor, "division by the zero polynomial");
    const auto p = a.p();
    if (a.degree() < b.degree()) return {PrimeFieldPolynomial(a.modulus()), a};
    std::vector<std::uint64_t> rem = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    std::vector<std::uint64_t> quo(rem.size() - db, 0);
    const auto inv = detail::inverse(d.back(), p);
    for (std::size_t k = rem.size(); k-- > db;) {
        const auto coef = detail::mulmod(rem[k], inv, p);
        if (coef == 0) continue;
        quo[k - db] = coef;
        for (std::size_t j = 0; j <= db; ++j) {
            auto& slot = rem[k - db + j];
            slot = (slot + p - detail::mulmod(coef, d[j], p)) % p;
        }
    }
    rem.resize(db);
    return {PrimeFieldPolynomial(a.modulus(), std::move(quo)), PrimeFieldPolynomial(a.modulus(), std::move(rem))};
}

inline PrimeFieldPolynomial fp_mod(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& b) {
    return fp_divmod(a, b).second;
}

inline PrimeFieldPolynomial fp_make_monic(const PrimeFieldPolynomial& a) {
    if (a.is_zero() || a.is_monic()) return a;
    const auto p = a.p();
    const auto inv = detail::inverse(a.leading(), p);
    std::vector<std::uint64_t> r = a.coeffs();
    for (auto& c : r) c = detail::mulmod(c, inv, p);
    return {a.modulus(), std::move(r)};
}

/* Monic gcd; gcd(0, 0) = 0. */
inline PrimeFieldPolynomial fp_gcd(PrimeFieldPolynomial a, PrimeFieldPolynomial b) {
    detail::check_same(a, b);
    while (!b.is_zero()) {
        auto r = fp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_make_monic(a);
}

/* g^e mod f by square-and-multiply over the bits of e. */
inline PrimeFieldPolynomial fp_powmod(const PrimeFieldPolynomial& g, const BigInt& e, const PrimeFieldPolynomial& f) {
    detail::check_same(g, f);
    if (f.is_zero()) throw DomainError(errors::zero_divisor, "powmod by the zero polynomial");
    if (e < 0) throw DomainError(errors::invalid_argument, "negative exponent");
    auto result = fp_mod(PrimeFieldPolynomial::constant(g.modulus(), 1), f);
    if (e == 0) return result;
    auto base = fp_mod(g, f);
    const auto top = boost::multiprecision::msb(e);
    for (std::size_t bit = top + 1; bit-- > 0;) {
        result = fp_mod(fp_mul(result, result), f);
        if (boost::multiprecision::bit_test(e, bit)) result = fp_mod(fp_mul(result, base), f);
    }
    return result;
}

/* Coefficientwise reduction; a monic input stays monic of the same degree. */
inline PrimeFieldPolynomial reduce_mod_p(const MonicIntPolynomial& f, std::uint64_t p) {
    auto v = f.with_leading();
    return PrimeFieldPolynomial::from_integers(PrimeModulus(p), v);
}

inline PrimeFieldPolynomial reduce_mod_p(const MonicIntPolynomial& f, PrimeModulus p) {
    auto v = f.with_leading();
    return PrimeFieldPolynomial::from_integers(p, v);
}

namespace detail {

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

inline bool is_irreducible_mod_p(const PrimeFieldPolynomial& poly) {
    if (poly.degree() < 1) throw DomainError(errors::invalid_argument, "irreducibility needs degree >= 1");
    const auto f = fp_make_monic(poly);
    const auto n = static_cast<std::uint64_t>(f.degree());
    if (n == 1) return true;
    const BigInt p = f.p();
    const auto x = fp_mod(PrimeFieldPolynomial::x(f.modulus()), f);

    // frob[k] = x^(p^k) mod f
    std::vector<PrimeFieldPolynomial> frob;
    frob.reserve(n + 1);
    frob.push_back(x);
    for (std::uint64_t k = 1; k <= n; ++k) frob.push_back(fp_powmod(frob.back(), p, f));
    if (frob[n] != x) return false;
    for (auto q : detail::prime_divisors(n)) {
        if (fp_gcd(fp_sub(frob[n / q], x), f).degree() >= 1) return false;
    }
    return true;
}

namespace detail {

inline std::int64_t mobius(std::uint64_t n) {
    std::int64_t mu = 1;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace detail

/* (1/n) sum_{d | n} mu(d) p^(n/d). */
inline BigCount count_irreducibles_exact(std::uint64_t degree, std::uint64_t p) {
    if (degree < 1) throw DomainError(errors::degree_zero, "degree must be >= 1");
    PrimeModulus m(p);
    BigInt sum = 0;
    for (std::uint64_t d = 1; d <= degree; ++d) {
        if (degree % d) continue;
        sum += detail::mobius(d) * ipow(BigInt(p), degree / d);
    }
    return sum / degree;
}

/* Tests all p^n monic polynomials of the given degree. */
inline BigCount count_irreducibles_exhaustive(std::uint64_t degree, std::uint64_t p,
                                              std::uint64_t limit = Limits{}.max_fp_oracle) {
    if (degree < 1) throw DomainError(errors::degree_zero, "degree must be >= 1");
    PrimeModulus m(p);
    if (ipow(BigInt(p), degree) > limit)
        throw FeasibilityError(errors::oracle_too_large, "p^n exceeds the configured oracle limit");
    std::vector<std::uint64_t> c(degree + 1, 0);
    c[degree] = 1;
    std::uint64_t hits = 0;
    for (;;) {
        if (is_irreducible_mod_p(PrimeFieldPolynomial(m, c))) ++hits;
        std::size_t i = 0;
        while (i < degree && c[i] == p - 1) c[i++] = 0;
        if (i == degree) break;
        ++c[i];
    }
    return hits;
}

struct IrreducibleAuditRow {
    std::uint64_t p = 0;
    BigCount exact;
    Rational main_term;                         // p^n / n
    Rational squared_normalized_error;          // (N_n - p^n/n)^2 / p^n
    std::optional<Rational> normalized_error;   // |N_n - p^n/n| / p^(n/2), n even only
    bool within_unit = false;                   // squared error <= 1
};

struct IrreducibleAudit {
    std::uint64_t degree = 0;
    std::vector<IrreducibleAuditRow> rows;
    Rational max_squared_normalized_error;
    bool all_within_unit = true;
};

/* Compares the exact count of monic irreducibles with p^n / n. The error is
   normalized by p^(n/2) and stored squared so it stays rational for odd n. */
inline IrreducibleAudit audit_theorem_irreducible(std::uint64_t degree, std::span<const std::uint64_t> primes) {
    if (degree < 2) throw DomainError(errors::invalid_argument, "irreducible-count audit needs degree >= 2");
    IrreducibleAudit audit;
    audit.degree = degree;
    for (auto p : primes) {
        IrreducibleAuditRow row;
        row.p = p;
        row.exact = count_irreducibles_exact(degree, p);
        const BigInt pn = ipow(BigInt(p), degree);
        row.main_term = Rational(pn, degree);
        const Rational diff = Rational(row.exact) - row.main_term;
        row.squared_normalized_error = diff * diff / pn;
        if (degree % 2 == 0) row.normalized_error = abs(diff) / Rational(ipow(BigInt(p), degree / 2));
        row.within_unit = row.squared_normalized_error <= 1;
        audit.all_within_unit = audit.all_within_unit && row.within_unit;
        if (row.squared_normalized_error > audit.max_squared_normalized_error)
            audit.max_squared_normalized_error = row.squared_normalized_error;
        audit.rows.push_back(std::move(row));
    }
    return audit;
}

/* Precomputed irreducibility of every monic degree-n polynomial mod p,
   indexed by sum_{i<n} c_i p^i. Used on hot enumeration paths. */
class IrreducibilityTable {
   public:
    static constexpr std::uint64_t default_max_entries = std::uint64_t{1} << 22;

    static bool fits(std::uint64_t degree, std::uint64_t p, std::uint64_t max_entries = default_max_entries) {
        return ipow(BigInt(p), degree) <= max_entries;
    }

    IrreducibilityTable(std::uint64_t degree, PrimeModulus p, std::uint64_t max_entries = default_max_entries)
        : degree_(degree), p_(p) {
        if (degree < 1) throw DomainError(errors::degree_zero, "degree must be >= 1");
        if (!fits(degree, p.value(), max_entries))
            throw FeasibilityError(errors::oracle_too_large, "irreducibility table too large");
        const auto size = static_cast<std::uint64_t>(ipow(BigInt(p.value()), degree));
        table_.resize(size);
        std::vector<std::uint64_t> c(degree + 1, 0);
        c[degree] = 1;
        for (std::uint64_t idx = 0; idx < size; ++idx) {
            table_[idx] = is_irreducible_mod_p(PrimeFieldPolynomial(p_, c)) ? 1 : 0;
            std::size_t i = 0;
            while (i < degree && c[i] == p.value() - 1) c[i++] = 0;
            if (i < degree) ++c[i];
        }
    }

    std::uint64_t degree() const noexcept { return degree_; }
    std::uint64_t p() const noexcept { return p_.value(); }

    /* coeffs = (a_0, ..., a_{n-1}) over Z; leading 1 implied. */
    bool irreducible(std::span<const std::int64_t> coeffs) const noexcept {
        const auto m = static_cast<std::int64_t>(p_.value());
        std::uint64_t idx = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            auto r = coeffs[i] % m;
            if (r < 0) r += m;
            idx = idx * p_.value() + static_cast<std::uint64_t>(r);
        }
        return table_[idx] != 0;
    }

   private:
    std::uint64_t degree_;
    PrimeModulus p_;
    std::vector<std::uint8_t> table_;
};

/* Shared, lazily built tables keyed by (degree, p). Thread-safe. */
inline std::shared_ptr<const IrreducibilityTable> cached_irreducibility_table(std::uint64_t degree, PrimeModulus p) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const IrreducibilityTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{degree, p.value()}];
    if (!slot) slot = std::make_shared<const IrreducibilityTable>(degree, p);
    return slot;
}

/* Irreducibility of monic integer vectors mod p. A table is used when it
   fits and is not much larger than the expected number of queries;
   otherwise each query runs Rabin's test. */
class ModPIrreducibility {
   public:
    ModPIrreducibility(std::uint64_t degree, PrimeModulus p, std::uint64_t expected_queries = 0) : p_(p) {
        const BigInt entries = ipow(BigInt(p.value()), degree);
        if (IrreducibilityTable::fits(degree, p.value()) && entries <= BigInt(expected_queries) * 4 + 4096)
            table_ = cached_irreducibility_table(degree, p);
    }

    bool irreducible(std::span<const std::int64_t> coeffs) const {
        if (table_) return table_->irreducible(coeffs);
        std::vector<std::int64_t> v(coeffs.begin(), coeffs.end());
        v.push_back(1);
        return is_irreducible_mod_p(PrimeFieldPolynomial::from_integers(p_, v));
    }

    std::uint64_t p() const noexcept { return p_.value(); }
    bool tabulated() const noexcept { return table_ != nullptr; }

   private:
    PrimeModulus p_;
    std::shared_ptr<const IrreducibilityTable> table_;
};

}  // namespace admissible

#endif
