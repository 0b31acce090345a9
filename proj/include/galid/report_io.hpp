#ifndef GALID_REPORT_IO_HPP
#define GALID_REPORT_IO_HPP

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <string>

#include "galid/determine.hpp"
#include "galid/disc_bound.hpp"
#include "galid/group_tables.hpp"
#include "galid/poly_parse.hpp"

namespace galid {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json type_to_json(const FactorType& t) {
    ordered_json arr = ordered_json::array();
    for (int p : t.parts()) arr.push_back(p);
    return arr;
}

inline std::string rat_string(const BigRat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

/// Decimal rendering of a rational to `digits` places, round-to-nearest.
inline std::string rat_decimal(const BigRat& r, int digits = 6) {
    BigInt num = numerator(r), den = denominator(r);
    const bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = (num * scale * 2 + den) / (2 * den); // rounded
    BigInt whole = scaled / scale, frac = scaled % scale;
    std::ostringstream os;
    if (neg && (whole != 0 || frac != 0)) os << '-';
    os << whole << '.' << std::setw(digits) << std::setfill('0') << frac;
    return os.str();
}

inline std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

inline std::string mode_str(DetermineMode m) {
    return m == DetermineMode::strict ? "strict" : "assume-complete";
}

inline ordered_json verdict_to_json(const Verdict& v) {
    ordered_json j;
    switch (v.kind) {
    case VerdictKind::conclusive:
        j["kind"] = "conclusive";
        j["group"] = v.group;
        break;
    case VerdictKind::consistent:
        j["kind"] = "consistent";
        j["groups"] = v.groups;
        break;
    case VerdictKind::exhausted:
        j["kind"] = "exhausted";
        j["groups"] = v.groups;
        break;
    }
    return j;
}

inline ordered_json densities_to_json(const std::map<FactorType, BigRat>& densities) {
    ordered_json arr = ordered_json::array();
    for (const auto& [t, d] : densities) {
        ordered_json row;
        row["type"] = type_to_json(t);
        row["density"] = rat_string(d);
        row["value"] = rat_decimal(d);
        arr.push_back(std::move(row));
    }
    return arr;
}

} // namespace detail

struct ReportOptions {
    bool with_timestamp = true;
    bool with_frequencies = false; ///< include expected densities per candidate
};

inline ordered_json bound_to_json(const BoundReport& b) {
    ordered_json j;
    j["degree"] = b.degree;
    j["root_bound"] = detail::rat_string(b.root_bound);
    j["z_bound"] = detail::rat_string(b.z_bound);
    j["beta_bound"] = detail::rat_string(b.beta_bound);
    j["h_degree_bound"] = b.h_degree_bound;
    j["disc_bound_base"] = b.disc_bound_base.str();
    j["disc_bound_exponent"] = b.disc_bound_exponent;
    j["disc_bound"] = b.disc_bound ? ordered_json(b.disc_bound->str()) : ordered_json(nullptr);
    j["disc_bound_log2"] = detail::rat_string(b.disc_bound_log2);
    if (b.lmo_exponent) {
        j["A"] = detail::rat_string(*b.lmo_exponent);
        j["prime_bound_log2"] = detail::rat_string(*b.prime_bound_log2);
    } else {
        j["A"] = nullptr;
        j["prime_bound_log2"] =
            "1 + A*log2(disc_bound), log2(disc_bound) <= " + detail::rat_string(b.disc_bound_log2);
    }
    return j;
}

/// The stable JSON report. Big integers are decimal strings; types are
/// ascending integer arrays; frequencies carry exact ratios and a 6-place
/// decimal rendering.
inline ordered_json report_to_json(const DeterminationReport& rep, const ReportOptions& opts = {},
                                   const BoundReport* bound = nullptr) {
    ordered_json j;
    j["poly"] = to_expression_string(rep.polynomial);
    j["degree"] = rep.polynomial.degree();
    j["disc"] = rep.disc.str();
    j["prime_limit"] = rep.prime_limit;
    j["primes_scanned"] = rep.primes_scanned;

    ordered_json skipped = ordered_json::array();
    for (const auto& [p, reason] : rep.skipped) {
        ordered_json row;
        row["prime"] = p;
        row["reason"] = skip_reason_str(reason);
        skipped.push_back(std::move(row));
    }
    j["skipped"] = std::move(skipped);

    ordered_json types = ordered_json::array();
    for (const FactorType& t : rep.observed_types) types.push_back(detail::type_to_json(t));
    j["observed_types"] = std::move(types);

    ordered_json counts = ordered_json::array();
    std::uint64_t total = 0;
    for (const auto& [t, c] : rep.counts) total += c;
    for (const auto& [t, c] : rep.counts) {
        ordered_json row;
        row["type"] = detail::type_to_json(t);
        row["count"] = c;
        counts.push_back(std::move(row));
    }
    j["counts"] = std::move(counts);

    ordered_json freqs;
    ordered_json observed = ordered_json::array();
    for (const auto& [t, c] : rep.counts) {
        ordered_json row;
        row["type"] = detail::type_to_json(t);
        row["count"] = c;
        const BigRat f = total ? BigRat(BigInt(c), BigInt(total)) : BigRat(0);
        row["ratio"] = detail::rat_string(f);
        row["value"] = detail::rat_decimal(f);
        observed.push_back(std::move(row));
    }
    freqs["observed"] = std::move(observed);
    if (opts.with_frequencies) {
        const DeterminationTable& table = determination_table(rep.polynomial.degree());
        ordered_json expected = ordered_json::array();
        for (const std::string& name : rep.candidates) {
            if (const TableRow* row = table.find(name)) {
                ordered_json g;
                g["group"] = name;
                g["densities"] = detail::densities_to_json(row->densities);
                expected.push_back(std::move(g));
            }
        }
        freqs["expected"] = std::move(expected);
    }
    j["frequencies"] = std::move(freqs);

    j["candidates"] = rep.candidates;
    j["verdict"] = detail::verdict_to_json(rep.verdict);
    j["mode"] = detail::mode_str(rep.mode);

    ordered_json refinement;
    refinement["enabled"] = rep.disc_refinement_enabled;
    refinement["used"] = rep.disc_refinement_used;
    refinement["disc_is_square"] = rep.disc_is_square;
    j["disc_refinement"] = std::move(refinement);

    if (rep.verdict.kind == VerdictKind::conclusive)
        j["expected_densities"] = detail::densities_to_json(rep.expected_densities);

    if (bound) j["bound"] = bound_to_json(*bound);
    if (opts.with_timestamp) j["timestamp"] = detail::iso8601_utc_now();
    return j;
}

/// Per-prime CSV log: `prime,type_or_skip_reason`, one row per scanned prime
/// in ascending order. Types are quoted since they contain commas.
inline std::string report_to_csv(const DeterminationReport& rep) {
    std::ostringstream os;
    os << "prime,type_or_skip_reason\n";
    for (const TypeObservation& obs : rep.log) {
        os << obs.prime << ',';
        if (obs.skipped())
            os << skip_reason_str(*obs.skip);
        else
            os << '"' << obs.type->str() << '"';
        os << '\n';
    }
    return os.str();
}

inline std::string report_to_text(const DeterminationReport& rep, const ReportOptions& opts = {}) {
    std::ostringstream os;
    os << "polynomial:     " << to_expression_string(rep.polynomial) << "\n";
    os << "degree:         " << rep.polynomial.degree() << "\n";
    os << "discriminant:   " << rep.disc
       << (rep.disc_is_square ? " (perfect square)" : "") << "\n";
    os << "primes scanned: " << rep.primes_scanned << " (limit " << rep.prime_limit << ")\n";
    os << "skipped:        ";
    if (rep.skipped.empty()) os << "none";
    for (std::size_t i = 0; i < rep.skipped.size(); ++i) {
        if (i) os << ", ";
        os << rep.skipped[i].first << " (" << skip_reason_str(rep.skipped[i].second) << ")";
    }
    os << "\n";
    os << "observed types: ";
    bool first = true;
    for (const FactorType& t : rep.observed_types) {
        if (!first) os << " ";
        first = false;
        os << t;
    }
    if (rep.observed_types.empty()) os << "none";
    os << "\n";
    std::uint64_t total = 0;
    for (const auto& [t, c] : rep.counts) total += c;
    for (const auto& [t, c] : rep.counts) {
        const BigRat f = total ? BigRat(BigInt(c), BigInt(total)) : BigRat(0);
        os << "  " << t << ": " << c << "  (" << detail::rat_string(f) << " = "
           << detail::rat_decimal(f) << ")\n";
    }
    os << "candidates:     ";
    for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
        if (i) os << ", ";
        os << rep.candidates[i];
    }
    if (rep.candidates.empty()) os << "none";
    os << "\n";
    os << "mode:           " << detail::mode_str(rep.mode) << "\n";
    os << "verdict:        ";
    switch (rep.verdict.kind) {
    case VerdictKind::conclusive:
        os << "conclusive " << rep.verdict.group;
        if (rep.disc_refinement_used) os << " (via disc-square refinement)";
        break;
    case VerdictKind::consistent: {
        os << "consistent with {";
        for (std::size_t i = 0; i < rep.verdict.groups.size(); ++i) {
            if (i) os << ", ";
            os << rep.verdict.groups[i];
        }
        os << "}";
        break;
    }
    case VerdictKind::exhausted:
        os << "exhausted (no candidate contains the observed types)";
        break;
    }
    os << "\n";
    if (rep.verdict.kind == VerdictKind::conclusive) {
        os << "expected densities for " << rep.verdict.group << ":\n";
        for (const auto& [t, d] : rep.expected_densities)
            os << "  " << t << ": " << detail::rat_string(d) << " = " << detail::rat_decimal(d)
               << "\n";
    }
    if (opts.with_frequencies) {
        const DeterminationTable& table = determination_table(rep.polynomial.degree());
        for (const std::string& name : rep.candidates) {
            if (const TableRow* row = table.find(name)) {
                os << "densities if " << name << ":\n";
                for (const auto& [t, d] : row->densities)
                    os << "  " << t << ": " << detail::rat_string(d) << " = "
                       << detail::rat_decimal(d) << "\n";
            }
        }
    }
    return os.str();
}

inline std::string bound_to_text(const IntPoly& c, const BoundReport& b) {
    std::ostringstream os;
    os << "polynomial:          " << to_expression_string(c) << "\n";
    os << "degree n:            " << b.degree << "\n";
    os << "root bound B_c:      " << detail::rat_string(b.root_bound) << "\n";
    os << "z bound (n!)^2/2:    " << detail::rat_string(b.z_bound) << "\n";
    os << "beta bound B_beta:   " << detail::rat_string(b.beta_bound) << "\n";
    os << "deg h bound m = n!:  " << b.h_degree_bound << "\n";
    os << "disc bound:          " << b.disc_bound_base << "^" << b.disc_bound_exponent;
    if (b.disc_bound) {
        const std::string digits = b.disc_bound->str();
        if (digits.size() <= 80)
            os << " = " << digits;
        else
            os << " = <" << digits.size() << " digits>";
    }
    os << "\n";
    os << "log2(disc bound) <=  " << detail::rat_decimal(b.disc_bound_log2) << "\n";
    if (b.lmo_exponent) {
        os << "A:                   " << detail::rat_string(*b.lmo_exponent) << "\n";
        os << "log2(prime bound) <= " << detail::rat_decimal(*b.prime_bound_log2)
           << "   [primes up to 2*disc_bound^A suffice]\n";
    } else {
        os << "A:                   unset; log2(prime bound) = 1 + A*log2(disc bound)\n";
    }
    return os.str();
}

/// The determination tables as versioned JSON (also what `tables` prints).
inline ordered_json tables_to_json(int degree) {
    const DeterminationTable& table = determination_table(degree);
    ordered_json j;
    j["version"] = DeterminationTable::kVersion;
    j["degree"] = table.degree;
    ordered_json rows = ordered_json::array();
    for (const TableRow& row : table.rows) {
        ordered_json r;
        r["name"] = row.name;
        r["order"] = row.order;
        ordered_json types = ordered_json::array();
        for (const FactorType& t : row.types) types.push_back(detail::type_to_json(t));
        r["types"] = std::move(types);
        r["inside_alternating"] = row.inside_alternating;
        r["densities"] = detail::densities_to_json(row.densities);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline std::string tables_to_text(int degree) {
    const DeterminationTable& table = determination_table(degree);
    std::ostringstream os;
    os << "degree " << table.degree << " determination table (v" << DeterminationTable::kVersion
       << ")\n";
    for (const TableRow& row : table.rows) {
        os << "  " << row.name << " (order " << row.order << "): ";
        bool first = true;
        for (const FactorType& t : row.types) {
            if (!first) os << ", ";
            first = false;
            os << t;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace galid

#endif // GALID_REPORT_IO_HPP
