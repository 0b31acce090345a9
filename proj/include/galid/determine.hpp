#ifndef GALID_DETERMINE_HPP
#define GALID_DETERMINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "galid/group_tables.hpp"
#include "galid/int_poly.hpp"
#include "galid/primes.hpp"

namespace galid {

/// Why a prime contributed no factorization type.
enum class SkipReason {
    divides_disc,   ///< p | disc(c)
    not_squarefree, ///< reduction has a repeated factor (same primes, kept as a separate signal)
};

inline const char* skip_reason_str(SkipReason r) {
    return r == SkipReason::divides_disc ? "divides-disc" : "not-squarefree";
}

/// One scanned prime: either a factorization type or a skip with reason.
struct TypeObservation {
    std::uint64_t prime = 0;
    std::optional<FactorType> type;  // set iff not skipped
    std::optional<SkipReason> skip;  // set iff skipped

    bool skipped() const noexcept { return skip.has_value(); }
};

/// Factorization type of c mod p, or a skip if p ramifies (p | disc) or the
/// reduction is not squarefree. Requires c monic irreducible.
inline TypeObservation observe(const IntPoly& c, std::uint64_t p, const BigInt& disc) {
    TypeObservation obs;
    obs.prime = p;
    if (disc % BigInt(p) == 0) {
        obs.skip = SkipReason::divides_disc;
        return obs;
    }
    ModPoly cp = reduce_mod_p(c, p);
    if (!is_squarefree_mod(cp)) {
        obs.skip = SkipReason::not_squarefree;
        return obs;
    }
    obs.type = distinct_degree_type(cp);
    return obs;
}

inline TypeObservation observe(const IntPoly& c, std::uint64_t p) {
    return observe(c, p, discriminant(c));
}

/// Mergeable accumulator for a scanned prime range. Merging two disjoint
/// ranges is the multiset union of the counters plus the union of the type
/// sets, so ranges may be scanned concurrently and combined in any order.
struct ScanAccumulator {
    std::uint64_t primes_scanned = 0;
    std::map<FactorType, std::uint64_t> counts;
    std::vector<std::pair<std::uint64_t, SkipReason>> skipped;
    std::vector<TypeObservation> log; // filled only when keep_log

    void absorb(const TypeObservation& obs, bool keep_log) {
        ++primes_scanned;
        if (obs.skipped())
            skipped.emplace_back(obs.prime, *obs.skip);
        else
            ++counts[*obs.type];
        if (keep_log) log.push_back(obs);
    }

    void merge(const ScanAccumulator& other) {
        primes_scanned += other.primes_scanned;
        for (const auto& [t, c] : other.counts) counts[t] += c;
        skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
        log.insert(log.end(), other.log.begin(), other.log.end());
        std::sort(skipped.begin(), skipped.end());
        std::sort(log.begin(), log.end(),
                  [](const TypeObservation& a, const TypeObservation& b) { return a.prime < b.prime; });
    }

    std::set<FactorType> observed_types() const {
        std::set<FactorType> out;
        for (const auto& [t, c] : counts) out.insert(t);
        return out;
    }
};

/// Scans all primes in [lo, hi] for c; pure, so ranges can run on separate
/// threads and be merged afterwards.
inline ScanAccumulator scan_range(const IntPoly& c, const BigInt& disc, std::uint64_t lo,
                                  std::uint64_t hi, bool keep_log = false) {
    ScanAccumulator acc;
    for_each_prime(hi, [&](std::uint64_t p) {
        if (p < lo) return true;
        acc.absorb(observe(c, p, disc), keep_log);
        return true;
    });
    return acc;
}

enum class DetermineMode {
    strict,          ///< report only set-inclusion certainties
    assume_complete, ///< additionally treat the observed set as complete
};

enum class VerdictKind {
    conclusive, ///< a single group remains
    consistent, ///< several candidates remain consistent with the observations
    exhausted,  ///< no candidate contains the observations (reducible or bad input)
};

struct Verdict {
    VerdictKind kind = VerdictKind::consistent;
    std::string group;               // set iff conclusive
    std::vector<std::string> groups; // the surviving candidates otherwise
};

struct DetermineOptions {
    std::uint64_t prime_limit = 1000;
    DetermineMode mode = DetermineMode::strict;
    bool disc_refinement = true; ///< allow the square-discriminant tie-break
    bool keep_log = false;       ///< retain the per-prime observation log
    int irreducibility_budget = 40;
};

struct DeterminationReport {
    IntPoly polynomial;
    BigInt disc;
    std::uint64_t prime_limit = 0;
    std::uint64_t primes_scanned = 0;
    std::vector<std::pair<std::uint64_t, SkipReason>> skipped;
    std::set<FactorType> observed_types;
    std::map<FactorType, std::uint64_t> counts;
    std::vector<std::string> candidates; ///< type-inclusion survivors, table order
    Verdict verdict;
    DetermineMode mode = DetermineMode::strict;
    bool disc_refinement_enabled = true;
    bool disc_refinement_used = false; ///< verdict was settled by the parity tie-break
    bool disc_is_square = false;
    std::map<FactorType, BigRat> expected_densities; ///< for the verdict group when conclusive
    std::vector<TypeObservation> log;                ///< per-prime, when requested
};

/// True iff disc(c) is a perfect square (the classical alternating-group
/// criterion; used only as an optional tie-break).
inline bool disc_square_refinement(const IntPoly& c) {
    const BigInt d = discriminant(c);
    if (d < 0) return false;
    const BigInt r = boost::multiprecision::sqrt(d);
    return r * r == d;
}

/// The determination pipeline: scan primes ascending up to the limit,
/// collect factorization types, and filter the degree-n candidate list down
/// to the groups whose cycle-type set contains everything observed.
///
/// strict mode reports conclusive(G) only when G is the single surviving
/// candidate (optionally after the parity tie-break); assume-complete mode
/// additionally reports the unique candidate whose full set equals the
/// observed set.
inline DeterminationReport determine(const IntPoly& c, const DetermineOptions& opts = {}) {
    const int n = c.degree();
    if (n < 3 || n > 5)
        throw std::invalid_argument("determine: degree must be 3, 4, or 5");
    if (!c.is_monic()) throw std::invalid_argument("determine: polynomial must be monic");
    if (!is_irreducible(c, opts.irreducibility_budget).irreducible())
        throw std::invalid_argument("determine: polynomial is reducible over Q");

    DeterminationReport rep;
    rep.polynomial = c;
    rep.disc = discriminant(c);
    rep.prime_limit = opts.prime_limit;
    rep.mode = opts.mode;
    rep.disc_refinement_enabled = opts.disc_refinement;
    {
        const BigInt d = rep.disc < 0 ? BigInt(-rep.disc) : rep.disc;
        const BigInt r = boost::multiprecision::sqrt(d);
        rep.disc_is_square = rep.disc >= 0 && r * r == rep.disc;
    }

    ScanAccumulator acc = scan_range(c, rep.disc, 2, opts.prime_limit, opts.keep_log);
    rep.primes_scanned = acc.primes_scanned;
    rep.skipped = std::move(acc.skipped);
    rep.counts = acc.counts;
    rep.observed_types = acc.observed_types();
    rep.log = std::move(acc.log);

    const DeterminationTable& table = determination_table(n);
    std::vector<const TableRow*> candidates;
    for (const TableRow& row : table.rows) {
        bool contains_all = true;
        for (const FactorType& t : rep.observed_types)
            if (!row.types.count(t)) { contains_all = false; break; }
        if (contains_all) candidates.push_back(&row);
    }
    for (const TableRow* row : candidates) rep.candidates.push_back(row->name);

    auto conclude = [&](const TableRow& row) {
        rep.verdict.kind = VerdictKind::conclusive;
        rep.verdict.group = row.name;
        rep.expected_densities = row.densities;
    };

    if (candidates.empty()) {
        rep.verdict.kind = VerdictKind::exhausted;
        return rep;
    }
    if (candidates.size() == 1) {
        conclude(*candidates.front());
        return rep;
    }

    if (opts.mode == DetermineMode::assume_complete) {
        const TableRow* exact = nullptr;
        bool unique = true;
        for (const TableRow* row : candidates) {
            if (row->types == rep.observed_types) {
                if (exact) unique = false;
                exact = row;
            }
        }
        if (exact && unique) {
            conclude(*exact);
            return rep;
        }
    }

    if (opts.disc_refinement) {
        // parity tie-break: a square discriminant confines the group to the
        // alternating group, a non-square excludes containment
        std::vector<const TableRow*> cut;
        for (const TableRow* row : candidates)
            if (row->inside_alternating == rep.disc_is_square) cut.push_back(row);
        if (cut.size() == 1) {
            rep.disc_refinement_used = true;
            conclude(*cut.front());
            return rep;
        }
    }

    rep.verdict.kind = VerdictKind::consistent;
    rep.verdict.groups = rep.candidates;
    return rep;
}

/// Observed frequency of one type over the non-skipped primes.
struct TypeFrequency {
    std::uint64_t count = 0;
    BigRat frequency; ///< count / total observed, exact
};

struct FrequencyReport {
    std::uint64_t observed_primes = 0;
    std::map<FactorType, TypeFrequency> frequencies;
    /// expected densities for each surviving candidate, keyed by group name
    std::map<std::string, std::map<FactorType, BigRat>> expected;
};

/// Frequencies of the observed types against the Chebotarev densities of
/// every surviving candidate.
inline FrequencyReport frequency_report(const IntPoly& c, std::uint64_t prime_limit,
                                        DetermineMode mode = DetermineMode::strict) {
    DetermineOptions opts;
    opts.prime_limit = prime_limit;
    opts.mode = mode;
    const DeterminationReport rep = determine(c, opts);

    FrequencyReport out;
    for (const auto& [t, cnt] : rep.counts) out.observed_primes += cnt;
    for (const auto& [t, cnt] : rep.counts) {
        TypeFrequency f;
        f.count = cnt;
        f.frequency = BigRat(BigInt(cnt), BigInt(out.observed_primes));
        out.frequencies.emplace(t, std::move(f));
    }
    const DeterminationTable& table = determination_table(c.degree());
    for (const std::string& name : rep.candidates)
        if (const TableRow* row = table.find(name)) out.expected.emplace(name, row->densities);
    return out;
}

} // namespace galid

#endif // GALID_DETERMINE_HPP
