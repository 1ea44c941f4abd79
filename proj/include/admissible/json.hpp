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

/* JSON forms of the toolkit's values and reports.

   Integers that fit in 64 bits serialize as JSON numbers, larger ones as
   decimal strings. Rationals always serialize as {"num": "...", "den": "..."}.
   Keys keep insertion order so output is byte-stable. */

#ifndef ADMISSIBLE_JSON_HPP
#define ADMISSIBLE_JSON_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "finite_field.hpp"
#include "integer_irreducibility.hpp"
#include "numeric.hpp"
#include "polynomials.hpp"
#include "sieve.hpp"

namespace admissible::json {

using Json = nlohmann::ordered_json;

inline Json integer(const BigInt& v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v);
    return v.str();
}

inline Json rational(const Rational& q) {
    return Json{{"num", boost::multiprecision::numerator(q).str()}, {"den", boost::multiprecision::denominator(q).str()}};
}

inline Json rational(const std::optional<Rational>& q) { return q ? rational(*q) : Json(nullptr); }

/* {"degree":3,"coeffs":[1,2,2]} with coeffs = (a_0, ..., a_{n-1}) */
inline Json vector_form(std::span<const std::int64_t> coeffs) {
    return Json{{"degree", coeffs.size()}, {"coeffs", std::vector<std::int64_t>(coeffs.begin(), coeffs.end())}};
}

inline Json vector_form(const MonicIntPolynomial& f) { return vector_form(std::span<const std::int64_t>(f.coeffs())); }

inline Json bounds(const BoundsAuditReport& r) {
    Json j;
    j["degree"] = r.degree;
    j["height"] = r.height;
    j["exact_count"] = integer(r.exact_count);
    j["paper_lower"] = integer(r.paper_lower);
    j["paper_upper"] = integer(r.paper_upper);
    j["density_ratio"] = rational(r.density_ratio);
    j["lower_violated"] = r.lower_violated;
    j["upper_violated"] = r.upper_violated;
    return j;
}

inline Json witness(const MonicIntPolynomial& f, const FactorizationWitness& w) {
    Json j;
    j["polynomial"] = to_text(f);
    j["coeffs"] = f.coeffs();
    j["irreducible"] = w.irreducible();
    if (w.factors) j["factors"] = Json::array({to_text(w.factors->first), to_text(w.factors->second)});
    else j["factors"] = nullptr;
    return j;
}

inline Json irreducible_audit(const IrreducibleAudit& a) {
    Json rows = Json::array();
    for (const auto& r : a.rows) {
        Json row;
        row["p"] = r.p;
        row["exact"] = integer(r.exact);
        row["main_term"] = rational(r.main_term);
        row["squared_normalized_error"] = rational(r.squared_normalized_error);
        row["normalized_error"] = rational(r.normalized_error);
        row["within_unit"] = r.within_unit;
        rows.push_back(std::move(row));
    }
    Json j;
    j["degree"] = a.degree;
    j["convention"] = "squared_normalized_error = (N_n - p^n/n)^2 / p^n; normalized_error given for even n only";
    j["rows"] = std::move(rows);
    j["max_squared_normalized_error"] = rational(a.max_squared_normalized_error);
    j["all_within_unit"] = a.all_within_unit;
    return j;
}

inline Json chebyshev_sample(const ChebyshevSample& s) { return Json{{"z", s.z}, {"pi", s.pi}, {"ratio", s.ratio}}; }

inline Json chebyshev(const ChebyshevAudit& a) {
    Json j;
    j["z_max"] = a.z_max;
    j["ratio"] = "pi(z) * ln(z) / z, floating point";
    j["min"] = chebyshev_sample(a.min_all);
    j["max"] = chebyshev_sample(a.max_all);
    Json window;
    window["from"] = a.window_start;
    window["to"] = std::min<std::uint64_t>(a.z_max, 1'000'000);
    window["lo"] = a.window_lo;
    window["hi"] = a.window_hi;
    window["min"] = a.min_window ? chebyshev_sample(*a.min_window) : Json(nullptr);
    window["max"] = a.max_window ? chebyshev_sample(*a.max_window) : Json(nullptr);
    window["holds"] = a.window_holds;
    j["window"] = std::move(window);
    Json cps = Json::array();
    for (const auto& s : a.checkpoints) cps.push_back(chebyshev_sample(s));
    j["checkpoints"] = std::move(cps);
    return j;
}

inline Json turan_terms(const TuranBoundTerms& t) {
    return Json{{"U", rational(t.u)},
                {"main", rational(t.main)},
                {"single_remainders", rational(t.single)},
                {"pair_remainders", rational(t.pairs)},
                {"total", rational(t.total)}};
}

inline Json pipeline(const PipelineReport& r) {
    Json j;
    j["degree"] = r.degree;
    j["height"] = r.height;
    j["z"] = r.z;
    j["z_source"] = r.z_overridden ? "override" : (r.height >= 2 ? "round(H^(1/3) (ln H)^(1/3)), nearest, half away from zero"
                                                                 : "H < 2: empty sieve");
    j["primes"] = r.primes;
    j["density"] = rational(Rational(1, r.degree));
    j["N"] = integer(r.ambient);
    j["S_exact"] = integer(r.sifted);
    j["S_bound"] = r.bound ? turan_terms(*r.bound) : Json(nullptr);
    j["A"] = integer(r.irreducible);
    j["reducible"] = integer(r.reducible);
    j["turan_holds"] = r.turan_holds;
    j["chain_holds"] = r.chain_holds;
    Json rem = Json::array();
    for (const auto& pr : r.remainders) {
        Json e;
        e["p"] = pr.p;
        e["members"] = integer(pr.members);
        e["R_p"] = rational(pr.exact);
        e["paper_shape_approx"] = pr.paper_shape;
        rem.push_back(std::move(e));
    }
    j["remainders"] = std::move(rem);
    Json ref;
    ref["main_term_approx"] = r.main_term;
    ref["error_term_approx"] = r.error_term;
    j["reference"] = std::move(ref);
    return j;
}

}  // namespace admissible::json

#endif
