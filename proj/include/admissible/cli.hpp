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

/* Command-line front end. `run_cli` parses argv-style arguments, writes the
   report to `out` and any error object to `err`, and returns the exit code:
   0 success, 2 usage or invalid input, 3 feasibility limit, 1 otherwise. */

#ifndef ADMISSIBLE_CLI_HPP
#define ADMISSIBLE_CLI_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "finite_field.hpp"
#include "integer_irreducibility.hpp"
#include "json.hpp"
#include "limits.hpp"
#include "polynomials.hpp"
#include "sieve.hpp"

#ifndef ADMISSIBLE_VERSION
#define ADMISSIBLE_VERSION "0.1.0"
#endif

namespace admissible::cli {

inline constexpr const char* toolkit_version = ADMISSIBLE_VERSION;

enum ExitCode : int { ok = 0, failure = 1, usage = 2, infeasible = 3 };

/* RFC 4180 field quoting. */
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

inline void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << '\n';
}

/* Scalar JSON value as a CSV cell; rationals become "num/den". */
inline std::string cell(const json::Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object() && v.contains("num")) return v["num"].get<std::string>() + "/" + v["den"].get<std::string>();
    return v.dump();
}

/* One CSV table: header + rows of cells taken from objects by key. */
inline void csv_table(std::ostream& out, const std::vector<std::string>& keys, const json::Json& rows) {
    csv_row(out, keys);
    for (const auto& r : rows) {
        std::vector<std::string> f;
        for (const auto& k : keys) f.push_back(r.contains(k) ? cell(r[k]) : "");
        csv_row(out, f);
    }
}

inline std::string envelope(const std::string& command, json::Json parameters, json::Json results, bool exact) {
    json::Json e;
    e["command"] = command;
    e["parameters"] = std::move(parameters);
    e["results"] = std::move(results);
    e["toolkit_version"] = toolkit_version;
    e["exact"] = exact;
    return e.dump(2) + "\n";
}

inline void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
    json::Json e;
    e["error"] = json::Json{{"kind", kind}, {"message", message}};
    err << e.dump() << '\n';
}

struct Options {
    Limits limits;
    std::optional<std::uint64_t> max_oracle;
    std::string format = "json";
    std::size_t degree = 3;
    std::uint64_t height = 0;
    std::optional<std::uint64_t> limit;
    std::optional<std::uint64_t> z;
    std::vector<std::uint64_t> primes;
    std::uint64_t below = 0;
    std::uint64_t z_max = 1000;
    std::uint64_t from = 0, to = 0;
};

inline void cmd_count(const Options& o, std::ostream& out) {
    const auto report = make_bounds_report(o.degree, o.height);
    const auto target = target_sum(o.degree);
    json::Json r;
    r["degree"] = o.degree;
    r["height"] = o.height;
    r["target_sum"] = json::integer(target);
    r["exact_count"] = json::integer(report.exact_count);
    r["paper_lower"] = json::integer(report.paper_lower);
    r["paper_upper"] = json::integer(report.paper_upper);
    r["density_ratio"] = json::rational(report.density_ratio);
    r["lower_violated"] = report.lower_violated;
    r["upper_violated"] = report.upper_violated;
    r["unbounded_nonneg_count"] = json::integer(count_nonneg_compositions(o.degree, target));
    r["unbounded_positive_count"] = json::integer(count_positive_compositions(o.degree, target));
    const CompositionQuery q(o.degree, target, BigInt(o.height));
    if (ipow(BigInt(std::min<BigInt>(BigInt(o.height), target)) + 1, o.degree) <= o.limits.max_oracle)
        r["oracle_count"] = json::integer(brute_force_compositions(q, o.limits.max_oracle));
    else
        r["oracle_count"] = nullptr;
    r["formulas"] = json::Json{
        {"exact_count", "nonnegative compositions of n!-1 into n parts each <= H (inclusion-exclusion)"},
        {"paper_lower", "C(H-2, n-1)"},
        {"paper_upper", "C(Hn, n-1): positive compositions of Hn+1 into n parts"},
        {"density_ratio", "exact_count / H^(n-1)"},
        {"unbounded_nonneg_count", "C(n!-1+n-1, n-1): nonnegative compositions, no cap"},
        {"unbounded_positive_count", "C(n!-2, n-1): positive compositions, no cap"},
        {"oracle_count", "exhaustive tuple enumeration, null above --max-oracle"}};

    json::Json params{{"degree", o.degree}, {"height", o.height}};
    if (o.format == "csv") {
        json::Json rows = json::Json::array({r});
        csv_table(out, {"degree", "height", "target_sum", "exact_count", "paper_lower", "paper_upper", "density_ratio",
                        "lower_violated", "upper_violated", "unbounded_nonneg_count", "unbounded_positive_count",
                        "oracle_count"},
                  rows);
        return;
    }
    out << envelope("count", params, r, true);
}

inline void cmd_enumerate(const Options& o, std::ostream& out) {
    const auto total = count_admissible_exact(o.degree, o.height);
    const BigInt rows = o.limit ? std::min<BigInt>(total, BigInt(*o.limit)) : total;
    if (rows > o.limits.max_enum)
        throw FeasibilityError(errors::enumeration_too_large,
                               "enumeration of " + rows.str() + " polynomials exceeds the configured limit");
    AdmissibleStream s(o.degree, o.height, std::numeric_limits<std::uint64_t>::max());
    const bool csv = o.format == "csv";
    if (csv) {
        std::vector<std::string> header;
        for (std::size_t i = 0; i < o.degree; ++i) header.push_back("a_" + std::to_string(i));
        header.push_back("polynomial");
        csv_row(out, header);
    }
    std::uint64_t emitted = 0;
    while (BigInt(emitted) < rows && s.next()) {
        ++emitted;
        if (csv) {
            std::vector<std::string> f;
            for (auto c : s.coeffs()) f.push_back(std::to_string(c));
            f.push_back(to_text(s.current()));
            csv_row(out, f);
        } else {
            out << json::vector_form(s.coeffs()).dump() << '\n';
        }
    }
    if (BigInt(emitted) < total) {
        if (csv) {
            std::vector<std::string> f(o.degree, "");
            f.push_back("truncated: " + std::to_string(emitted) + " of " + total.str());
            csv_row(out, f);
        } else {
            json::Json t;
            t["truncated"] = true;
            t["emitted"] = emitted;
            t["total"] = json::integer(total);
            out << t.dump() << '\n';
        }
    }
}

inline void cmd_irr_count(const Options& o, std::ostream& out) {
    const auto all = classify_admissible(o.degree, o.height, o.limits);
    json::Json polys = json::Json::array();
    std::uint64_t irreducible = 0;
    for (const auto& c : all) {
        irreducible += c.witness.irreducible();
        polys.push_back(json::witness(c.poly, c.witness));
    }
    if (o.format == "csv") {
        json::Json rows = json::Json::array();
        for (const auto& p : polys) {
            json::Json row = p;
            row["coeffs"] = p["coeffs"].dump();
            row["factors"] = p["factors"].is_null() ? "" : p["factors"][0].get<std::string>() + " * " + p["factors"][1].get<std::string>();
            rows.push_back(row);
        }
        csv_table(out, {"polynomial", "coeffs", "irreducible", "factors"}, rows);
        return;
    }
    json::Json r;
    r["degree"] = o.degree;
    r["height"] = o.height;
    r["N"] = all.size();
    r["A"] = irreducible;
    r["reducible"] = all.size() - irreducible;
    r["polynomials"] = std::move(polys);
    out << envelope("irr-count", json::Json{{"degree", o.degree}, {"height", o.height}}, r, true);
}

inline void cmd_sieve(const Options& o, std::ostream& out) {
    const auto report = pipeline_lower_bound(o.degree, o.height, o.z, o.limits);
    json::Json r = json::pipeline(report);
    r["glossary"] = json::Json{
        {"S_exact", "admissible polynomials reducible mod every prime p < z"},
        {"S_bound", "Turan bound with delta_p = 1/n and exact remainders; null when no prime lies below z"},
        {"chain", "A >= N - S_exact, since a polynomial reducible over Z is reducible mod every prime"},
        {"approx", "fields ending in _approx are floating point reference magnitudes"}};
    if (o.format == "csv") {
        json::Json rows = json::Json::array();
        for (const auto& e : r["remainders"]) rows.push_back(e);
        csv_table(out, {"p", "members", "R_p", "paper_shape_approx"}, rows);
        return;
    }
    json::Json params{{"degree", o.degree}, {"height", o.height}};
    params["z"] = o.z ? json::Json(*o.z) : json::Json(nullptr);
    out << envelope("sieve", params, r, false);
}

inline void cmd_fp_audit(const Options& o, std::ostream& out) {
    const auto audit = audit_theorem_irreducible(o.degree, o.primes);
    json::Json r = json::irreducible_audit(audit);
    const auto fp_limit = o.max_oracle.value_or(o.limits.max_fp_oracle);
    for (auto& row : r["rows"]) {
        const auto p = row["p"].get<std::uint64_t>();
        if (ipow(BigInt(p), o.degree) <= fp_limit) {
            const auto ex = count_irreducibles_exhaustive(o.degree, p, fp_limit);
            row["exhaustive"] = json::integer(ex);
            row["agrees"] = ex == count_irreducibles_exact(o.degree, p);
        } else {
            row["exhaustive"] = nullptr;
            row["agrees"] = nullptr;
        }
    }
    if (o.format == "csv") {
        csv_table(out, {"p", "exact", "main_term", "squared_normalized_error", "normalized_error", "within_unit", "exhaustive", "agrees"},
                  r["rows"]);
        return;
    }
    out << envelope("fp-audit", json::Json{{"degree", o.degree}, {"primes", o.primes}}, r, true);
}

inline void cmd_primes(const Options& o, std::ostream& out) {
    const auto ps = primes_below(o.below);
    if (o.format == "csv") {
        csv_row(out, {"p"});
        for (auto p : ps) csv_row(out, {std::to_string(p)});
        return;
    }
    json::Json r;
    r["below"] = o.below;
    r["count"] = ps.size();
    r["primes"] = ps;
    out << envelope("primes", json::Json{{"below", o.below}}, r, true);
}

inline void cmd_chebyshev(const Options& o, std::ostream& out) {
    const auto a = audit_chebyshev(o.z_max);
    json::Json r = json::chebyshev(a);
    if (o.format == "csv") {
        csv_table(out, {"z", "pi", "ratio"}, r["checkpoints"]);
        return;
    }
    out << envelope("chebyshev", json::Json{{"max", o.z_max}}, r, false);
}

inline void cmd_bounds_audit(const Options& o, std::ostream& out) {
    const auto reports = audit_bounds(o.degree, o.from, o.to);
    json::Json rows = json::Json::array();
    for (const auto& rep : reports) rows.push_back(json::bounds(rep));
    if (o.format == "csv") {
        csv_table(out, {"degree", "height", "exact_count", "paper_lower", "paper_upper", "density_ratio", "lower_violated", "upper_violated"},
                  rows);
        return;
    }
    json::Json r;
    r["degree"] = o.degree;
    r["reports"] = std::move(rows);
    std::uint64_t lower = 0, upper = 0;
    for (const auto& rep : reports) {
        lower += rep.lower_violated;
        upper += rep.upper_violated;
    }
    r["lower_violations"] = lower;
    r["upper_violations"] = upper;
    out << envelope("bounds-audit", json::Json{{"degree", o.degree}, {"from", o.from}, {"to", o.to}}, r, true);
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact enumeration, counting and sieve audits for monic admissible polynomials", "admissible"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(toolkit_version));
    app.add_option("--max-enum", o.limits.max_enum, "Enumeration size limit")->capture_default_str();
    app.add_option("--max-oracle", o.max_oracle, "Brute-force oracle limit (compositions: 1e8, F_p: 1e7)");
    app.add_option("--max-search", o.limits.max_search, "Factor candidate limit over Z")->capture_default_str();

    std::function<void(const Options&, std::ostream&)> action;
    auto add = [&](const char* name, const char* help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    auto format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
    };
    auto degree = [&](CLI::App* sub) { sub->add_option("--degree", o.degree, "Polynomial degree n")->required()->check(CLI::Range(1, 1000)); };
    auto height = [&](CLI::App* sub) { sub->add_option("--height", o.height, "Coefficient cap H")->required(); };

    auto* count = add("count", "Exact N(H) with the bound formulas", cmd_count);
    degree(count), height(count), format(count, {"json", "csv"});

    auto* enumerate = add("enumerate", "Stream admissible coefficient vectors in lexicographic order", cmd_enumerate);
    degree(enumerate), height(enumerate), format(enumerate, {"json", "jsonl", "csv"});
    enumerate->add_option("--limit", o.limit, "Stop after this many rows");

    auto* irr = add("irr-count", "Exact A(H) with a witness per polynomial", cmd_irr_count);
    degree(irr), height(irr), format(irr, {"json", "csv"});

    auto* sieve = add("sieve", "Turan sieve pipeline on the exact admissible set", cmd_sieve);
    degree(sieve), height(sieve), format(sieve, {"json", "csv"});
    sieve->add_option("--z", o.z, "Sieve level (default round(H^(1/3) (ln H)^(1/3)))")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000}));

    auto* fpa = add("fp-audit", "Irreducible counts over F_p against p^n/n", cmd_fp_audit);
    degree(fpa), format(fpa, {"json", "csv"});
    fpa->add_option("--primes", o.primes, "Comma-separated primes")->required()->delimiter(',');

    auto* primes = add("primes", "Primes strictly below a bound", cmd_primes);
    primes->add_option("--below", o.below, "Exclusive upper bound")->required()->check(CLI::Range(std::uint64_t{1}, max_sieve_bound));
    format(primes, {"json", "csv"});

    auto* cheb = add("chebyshev", "pi(z) log z / z over [3, max]", cmd_chebyshev);
    cheb->add_option("--max", o.z_max, "Largest z")->capture_default_str()->check(CLI::Range(std::uint64_t{3}, max_sieve_bound));
    format(cheb, {"json", "csv"});

    auto* audit = add("bounds-audit", "Bound audit for every H in [from, to]", cmd_bounds_audit);
    degree(audit), format(audit, {"json", "csv"});
    audit->add_option("--from", o.from, "First H")->required();
    audit->add_option("--to", o.to, "Last H")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << toolkit_version << '\n';
        return ok;
    } catch (const CLI::ParseError& e) {
        write_error(err, "usage", e.what());
        return usage;
    }

    if (o.max_oracle) o.limits.max_oracle = o.limits.max_fp_oracle = *o.max_oracle;
    if (o.format == "jsonl") o.format = "json";

    try {
        std::ostringstream buffer;  // no output until the command completes
        action(o, buffer);
        out << buffer.str();
        return ok;
    } catch (const FeasibilityError& e) {
        write_error(err, e.kind(), e.what());
        return infeasible;
    } catch (const DomainError& e) {
        write_error(err, e.kind(), e.what());
        return usage;
    } catch (const Error& e) {
        write_error(err, e.kind(), e.what());
        return failure;
    } catch (const std::exception& e) {
        write_error(err, "internal", e.what());
        return failure;
    }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace admissible::cli

#endif
