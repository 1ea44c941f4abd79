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

/* Monic integer polynomials, the admissibility predicate, and the exact
   count / enumeration of monic admissible polynomials of bounded height.

   A monic degree-n polynomial x^n + a_{n-1}x^{n-1} + ... + a_0 is
   admissible when 1 + a_{n-1} + ... + a_0 == n!. With 0 <= a_i <= H its
   coefficient vector is a bounded composition of n! - 1 into n parts. */

#ifndef ADMISSIBLE_POLYNOMIALS_HPP
#define ADMISSIBLE_POLYNOMIALS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "numeric.hpp"

namespace admissible {

/* Largest degree whose target n! - 1 fits the machine coefficients used by
   enumeration. Counting has no such limit. */
inline constexpr std::size_t max_enumerable_degree = 20;

class MonicIntPolynomial {
   public:
    /* coeffs = (a_0, ..., a_{n-1}); the leading 1 is implicit. */
    explicit MonicIntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw DomainError(errors::degree_zero, "monic polynomial needs degree >= 1");
    }

    std::size_t degree() const noexcept { return coeffs_.size(); }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    std::int64_t operator[](std::size_t i) const noexcept { return i == coeffs_.size() ? 1 : coeffs_[i]; }

    /* (a_0, ..., a_{n-1}, 1) */
    std::vector<std::int64_t> with_leading() const {
        auto v = coeffs_;
        v.push_back(1);
        return v;
    }

    friend bool operator==(const MonicIntPolynomial&, const MonicIntPolynomial&) = default;
    friend auto operator<=>(const MonicIntPolynomial&, const MonicIntPolynomial&) = default;

   private:
    std::vector<std::int64_t> coeffs_;
};

/* coeffs_with_leading = (a_0, ..., a_n), a_n last. True iff sum == n!. */
inline bool is_admissible(std::span<const std::int64_t> coeffs_with_leading) {
    if (coeffs_with_leading.empty()) throw DomainError(errors::invalid_argument, "empty coefficient sequence");
    if (coeffs_with_leading.size() == 1) throw DomainError(errors::degree_zero, "admissibility needs degree >= 1");
    BigInt sum = 0;
    for (auto c : coeffs_with_leading) sum += c;
    return sum == factorial(coeffs_with_leading.size() - 1);
}

inline bool is_admissible(const MonicIntPolynomial& f) {
    auto v = f.with_leading();
    return is_admissible(std::span<const std::int64_t>(v));
}

/* n! - 1, the required sum of the non-leading coefficients. */
inline BigCount target_sum(std::size_t degree) {
    if (degree < 1) throw DomainError(errors::degree_zero, "degree must be >= 1");
    return factorial(degree) - 1;
}

/* N(H): the number of (a_0..a_{n-1}) in [0, H]^n summing to n! - 1. */
inline BigCount count_admissible_exact(std::size_t degree, std::uint64_t height) {
    return count_bounded_compositions(CompositionQuery(degree, target_sum(degree), BigInt(height)));
}

/* C(H - 2, n - 1) */
inline BigCount paper_lower_bound(std::size_t degree, std::uint64_t height) {
    if (degree < 1) throw DomainError(errors::degree_zero, "degree must be >= 1");
    return binomial(BigInt(height) - 2, static_cast<std::int64_t>(degree - 1));
}

/* C(H n, n - 1): positive compositions of Hn + 1 into n parts. */
inline BigCount paper_upper_bound(std::size_t degree, std::uint64_t height) {
    if (degree < 1) throw DomainError(errors::degree_zero, "degree must be >= 1");
    return binomial(BigInt(height) * degree, static_cast<std::int64_t>(degree - 1));
}

/* Stream of admissible coefficient vectors in ascending lexicographic order
   of (a_0, ..., a_{n-1}). Single consumer; independent streams may run
   concurrently.

       AdmissibleStream s(3, 2);
       while (s.next()) use(s.coeffs());
*/
class AdmissibleStream {
   public:
    AdmissibleStream(std::size_t degree, std::uint64_t height, std::uint64_t max_enum = Limits{}.max_enum)
        : degree_(degree), height_(height) {
        if (degree < 1) throw DomainError(errors::degree_zero, "degree must be >= 1");
        total_ = count_admissible_exact(degree, height);
        if (total_ > max_enum)
            throw FeasibilityError(errors::enumeration_too_large,
                                   "enumeration of " + total_.str() + " polynomials exceeds the configured limit");
        if (total_ == 0) done_ = true;
        else if (degree > max_enumerable_degree)
            throw FeasibilityError(errors::enumeration_too_large, "coefficients exceed the enumerable range");
        if (!done_) {
            target_ = static_cast<std::int64_t>(target_sum(degree));
            cap_ = static_cast<std::int64_t>(std::min<std::uint64_t>(height, static_cast<std::uint64_t>(target_)));
            coeffs_.assign(degree, 0);
        }
    }

    std::size_t degree() const noexcept { return degree_; }
    std::uint64_t height() const noexcept { return height_; }
    const BigCount& size() const noexcept { return total_; }

    /* Advance to the next vector; false once exhausted. */
    bool next() {
        if (done_) return false;
        if (!started_) {
            started_ = true;
            fill_min(0, target_);
            return true;
        }
        std::int64_t suffix = 0;
        for (std::size_t i = degree_ - 1; i-- > 0;) {
            suffix += coeffs_[i + 1];
            if (coeffs_[i] < cap_ && suffix >= 1) {
                ++coeffs_[i];
                fill_min(i + 1, suffix - 1);
                return true;
            }
        }
        done_ = true;
        return false;
    }

    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
    MonicIntPolynomial current() const { return MonicIntPolynomial(coeffs_); }

   private:
    // lexicographically smallest fill of positions [from, n) summing to rem
    void fill_min(std::size_t from, std::int64_t rem) {
        for (std::size_t j = from; j < degree_; ++j) {
            const auto room = static_cast<__int128>(degree_ - 1 - j) * cap_;
            const auto a = std::max<__int128>(0, rem - room);
            coeffs_[j] = static_cast<std::int64_t>(a);
            rem -= coeffs_[j];
        }
    }

    std::size_t degree_;
    std::uint64_t height_;
    BigCount total_;
    std::int64_t target_ = 0;
    std::int64_t cap_ = 0;
    std::vector<std::int64_t> coeffs_;
    bool started_ = false;
    bool done_ = false;
};

inline AdmissibleStream enumerate_admissible(std::size_t degree, std::uint64_t height,
                                             std::uint64_t max_enum = Limits{}.max_enum) {
    return AdmissibleStream(degree, height, max_enum);
}

/* Calls fn(std::span<const std::int64_t>) for every admissible vector. */
template <class Fn>
void for_each_admissible(std::size_t degree, std::uint64_t height, Fn&& fn, std::uint64_t max_enum = Limits{}.max_enum) {
    AdmissibleStream s(degree, height, max_enum);
    while (s.next()) fn(s.coeffs());
}

struct BoundsAuditReport {
    std::size_t degree = 0;
    std::uint64_t height = 0;
    BigCount exact_count;
    BigCount paper_lower;
    BigCount paper_upper;
    std::optional<Rational> density_ratio;  // exact_count / H^{n-1}; empty for H == 0
    bool lower_violated = false;
    bool upper_violated = false;
};

inline BoundsAuditReport make_bounds_report(std::size_t degree, std::uint64_t height) {
    BoundsAuditReport r;
    r.degree = degree;
    r.height = height;
    r.exact_count = count_admissible_exact(degree, height);
    r.paper_lower = paper_lower_bound(degree, height);
    r.paper_upper = paper_upper_bound(degree, height);
    if (height >= 1) r.density_ratio = Rational(r.exact_count, ipow(BigInt(height), degree - 1));
    r.lower_violated = r.paper_lower > r.exact_count;
    r.upper_violated = r.paper_upper < r.exact_count;
    return r;
}

/* One report per H in [h_lo, h_hi]. Bounds are audited, not assumed: a
   failing bound is flagged, never thrown. */
inline std::vector<BoundsAuditReport> audit_bounds(std::size_t degree, std::uint64_t h_lo, std::uint64_t h_hi) {
    if (degree < 3) throw DomainError(errors::invalid_argument, "bounds audit needs degree >= 3");
    if (h_lo > h_hi || BigInt(h_hi) > factorial(degree))
        throw DomainError(errors::invalid_argument, "height interval must lie within [0, n!]");
    std::vector<BoundsAuditReport> out;
    out.reserve(h_hi - h_lo + 1);
    for (std::uint64_t h = h_lo;; ++h) {
        out.push_back(make_bounds_report(degree, h));
        if (h == h_hi) break;
    }
    return out;
}

/* "x^3 + 2x^2 + 2x + 1" from coefficients low to high (last = leading).
   Zero terms are omitted, unit coefficients dropped on x^k for k >= 1. */
template <class Int>
std::string polynomial_text(std::span<const Int> coeffs) {
    std::string out;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const auto c = static_cast<std::int64_t>(coeffs[k]);
        if (c == 0) continue;
        const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (first) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        first = false;
        if (k == 0 || mag != 1) out += std::to_string(mag);
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return first ? "0" : out;
}

inline std::string to_text(const MonicIntPolynomial& f) {
    auto v = f.with_leading();
    return polynomial_text(std::span<const std::int64_t>(v));
}

}  // namespace admissible

#endif
