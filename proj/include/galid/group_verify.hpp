#ifndef GALID_GROUP_VERIFY_HPP
#define GALID_GROUP_VERIFY_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "galid/perm_group.hpp"

namespace galid {

using id_t = PermGroup::id_t;

/// Outcome of one brute-force verification sweep. `checks` counts the
/// individual identities tested; `failure` holds the first counterexample.
struct VerifyReport {
    bool pass = true;
    long checks = 0;
    std::string failure;

    void fail(const std::string& msg) {
        if (pass) {
            pass = false;
            failure = msg;
        }
    }
};

namespace detail {

inline IdSet intersect_ids(const IdSet& a, const IdSet& b) {
    IdSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Double cosets HgD as sorted id sets, ordered by least member.
inline std::vector<IdSet> double_cosets(const PermGroup& g, const IdSet& h, const IdSet& d) {
    std::vector<int> dc_of(g.order(), -1);
    std::vector<IdSet> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (dc_of[x] >= 0) continue;
        IdSet dc;
        for (id_t hh : h)
            for (id_t dd : d)
                dc.push_back(g.mul(g.mul(hh, static_cast<id_t>(x)), dd));
        std::sort(dc.begin(), dc.end());
        dc.erase(std::unique(dc.begin(), dc.end()), dc.end());
        for (id_t m : dc) dc_of[m] = static_cast<int>(out.size());
        out.push_back(std::move(dc));
    }
    return out;
}

inline IdSet union_of_cosets(const CosetSpace& cs, const std::vector<int>& orbit) {
    IdSet u;
    for (int ci : orbit)
        u.insert(u.end(), cs.cosets[static_cast<std::size_t>(ci)].begin(),
                 cs.cosets[static_cast<std::size_t>(ci)].end());
    std::sort(u.begin(), u.end());
    return u;
}

} // namespace detail

/// Brute-force check of the double-coset orbit identities: the union of the
/// cosets in each orbit is a double coset, the two orbit counts agree, the
/// matched orbits (Hg)D <-> H(gD) satisfy a_i |D| = b_i |H| = |Hg_iD|, and
/// |HgD| = |H||D| / |H ∩ gDg^-1|.
struct DoubleCosetReport : VerifyReport {
    int right_orbits = 0; // s: D-orbits on H\G
    int left_orbits = 0;  // r: H-orbits on G/D
    FactorType right_orbit_lengths;
    FactorType double_coset_sizes;
};

inline DoubleCosetReport verify_double_coset_identities(const PermGroup& g, const PermGroup& h,
                                                        const PermGroup& d) {
    DoubleCosetReport rep;
    const auto h_ids = g.locate(h);
    const auto d_ids = g.locate(d);

    const auto rcs = detail::right_cosets(g, h_ids);
    const auto r_orbits = detail::coset_orbits_under(g, rcs, d_ids);
    const auto lcs = detail::left_cosets(g, d_ids);
    const auto l_orbits = detail::left_coset_orbits_under(g, lcs, h_ids);
    const auto dcs = detail::double_cosets(g, h_ids, d_ids);

    rep.right_orbits = static_cast<int>(r_orbits.size());
    rep.left_orbits = static_cast<int>(l_orbits.size());
    for (const auto& o : r_orbits) rep.right_orbit_lengths.add(static_cast<int>(o.size()));
    for (const auto& dc : dcs) rep.double_coset_sizes.add(static_cast<int>(dc.size()));

    // (ii) r = s (both also equal the number of double cosets)
    ++rep.checks;
    if (r_orbits.size() != l_orbits.size() || r_orbits.size() != dcs.size())
        rep.fail("orbit counts r, s and double-coset count disagree");

    // (i) orbit unions are double cosets; (iii) sizes match per double coset
    std::vector<long> right_cosets_per_dc(dcs.size(), -1), left_cosets_per_dc(dcs.size(), -1);
    auto dc_index_of = [&](const detail::IdSet& u) -> int {
        for (std::size_t i = 0; i < dcs.size(); ++i)
            if (dcs[i] == u) return static_cast<int>(i);
        return -1;
    };
    for (const auto& orbit : r_orbits) {
        ++rep.checks;
        int idx = dc_index_of(detail::union_of_cosets(rcs, orbit));
        if (idx < 0) {
            rep.fail("union of a D-orbit on H\\G is not a double coset");
            continue;
        }
        right_cosets_per_dc[static_cast<std::size_t>(idx)] = static_cast<long>(orbit.size());
    }
    for (const auto& orbit : l_orbits) {
        ++rep.checks;
        int idx = dc_index_of(detail::union_of_cosets(lcs, orbit));
        if (idx < 0) {
            rep.fail("union of an H-orbit on G/D is not a double coset");
            continue;
        }
        left_cosets_per_dc[static_cast<std::size_t>(idx)] = static_cast<long>(orbit.size());
    }
    for (std::size_t i = 0; i < dcs.size(); ++i) {
        const long a_i = left_cosets_per_dc[i], b_i = right_cosets_per_dc[i];
        ++rep.checks;
        if (a_i < 0 || b_i < 0) {
            rep.fail("a double coset was not hit by both orbit families");
            continue;
        }
        const long size = static_cast<long>(dcs[i].size());
        if (a_i * static_cast<long>(d_ids.size()) != size ||
            b_i * static_cast<long>(h_ids.size()) != size) {
            std::ostringstream os;
            os << "orbit/double-coset size identity failed: a=" << a_i << " b=" << b_i
               << " |H|=" << h_ids.size() << " |D|=" << d_ids.size() << " |HgD|=" << size;
            rep.fail(os.str());
        }
        // (iv) |HgD| = |H||D| / |H ∩ gDg^-1| with g the canonical representative
        ++rep.checks;
        const id_t rep_g = dcs[i].front();
        const auto conj_d = detail::conjugate_ids(g, d_ids, rep_g);
        const auto meet = detail::intersect_ids(h_ids, conj_d);
        if (size * static_cast<long>(meet.size()) !=
            static_cast<long>(h_ids.size()) * static_cast<long>(d_ids.size()))
            rep.fail("|HgD| != |H||D| / |H ∩ gDg^-1|");
    }
    return rep;
}

/// For E normal in D: within each D-orbit on H\G all E-orbits have the same
/// length, equal to |E| / |H ∩ g_i E g_i^-1| for the orbit representative.
inline VerifyReport verify_stabilizer_orbit_lemma(const PermGroup& g, const PermGroup& d,
                                                  const PermGroup& e, const PermGroup& h) {
    const auto h_ids = g.locate(h);
    const auto d_ids = g.locate(d);
    const auto e_ids = g.locate(e);
    if (!d.contains_group(e))
        throw std::invalid_argument("verify_stabilizer_orbit_lemma: E must be a subgroup of D");
    {
        // normality of E in D, checked inside D
        const auto e_in_d = d.locate(e);
        if (!detail::is_normal_ids(d, e_in_d))
            throw std::invalid_argument("verify_stabilizer_orbit_lemma: E must be normal in D");
    }

    VerifyReport rep;
    const auto rcs = detail::right_cosets(g, h_ids);
    const auto d_orbits = detail::coset_orbits_under(g, rcs, d_ids);
    const auto e_orbits = detail::coset_orbits_under(g, rcs, e_ids);

    std::vector<int> e_orbit_of(rcs.cosets.size(), -1);
    for (std::size_t i = 0; i < e_orbits.size(); ++i)
        for (int c : e_orbits[i]) e_orbit_of[static_cast<std::size_t>(c)] = static_cast<int>(i);

    for (const auto& dorb : d_orbits) {
        const id_t g_i = rcs.cosets[static_cast<std::size_t>(dorb.front())].front();
        const auto conj_e = detail::conjugate_ids(g, e_ids, g_i);
        const auto meet = detail::intersect_ids(h_ids, conj_e);
        const std::size_t expected = e_ids.size() / meet.size();

        std::vector<int> seen_orbits;
        for (int c : dorb) {
            int eo = e_orbit_of[static_cast<std::size_t>(c)];
            if (std::find(seen_orbits.begin(), seen_orbits.end(), eo) != seen_orbits.end()) continue;
            seen_orbits.push_back(eo);
            ++rep.checks;
            if (e_orbits[static_cast<std::size_t>(eo)].size() != expected) {
                std::ostringstream os;
                os << "E-orbit length " << e_orbits[static_cast<std::size_t>(eo)].size()
                   << " != |E|/|H ∩ gEg^-1| = " << expected;
                rep.fail(os.str());
            }
        }
        // count of E-orbits inside the D-orbit must be |orbit| / expected
        ++rep.checks;
        if (seen_orbits.size() * expected != dorb.size())
            rep.fail("E-orbit count within a D-orbit inconsistent with lengths");
    }
    return rep;
}

/// Exhaustive check of the division criterion: two elements generate
/// conjugate cyclic subgroups iff the orbit-length multisets of H\G under
/// them coincide for every subgroup H.
struct LagariasReport : VerifyReport {
    long subgroups = 0;
    long pairs = 0;
    std::optional<std::pair<Perm, Perm>> violating_pair;
};

inline LagariasReport verify_lagarias_equivalence(const PermGroup& g) {
    LagariasReport rep;
    const auto lattice = detail::subgroup_lattice_ids(g);
    rep.subgroups = static_cast<long>(lattice.size());

    // signature of each element: orbit-length multisets over every subgroup
    std::vector<std::vector<FactorType>> sig(g.order());
    for (const auto& h_ids : lattice) {
        const auto cs = detail::right_cosets(g, h_ids);
        for (std::size_t x = 0; x < g.order(); ++x)
            sig[x].push_back(detail::orbit_lengths_of_cyclic(g, cs, static_cast<id_t>(x)));
    }

    std::vector<detail::IdSet> division_key(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
        division_key[x] = detail::canonical_conjugate(g, detail::cyclic_ids(g, static_cast<id_t>(x)));

    for (std::size_t i = 0; i < g.order(); ++i) {
        for (std::size_t j = i + 1; j < g.order(); ++j) {
            ++rep.pairs;
            ++rep.checks;
            const bool same_division = division_key[i] == division_key[j];
            const bool same_signature = sig[i] == sig[j];
            if (same_division != same_signature) {
                rep.fail(same_division
                             ? "same division but distinguishable orbit signatures"
                             : "different divisions but identical orbit signatures");
                if (!rep.violating_pair)
                    rep.violating_pair = {g.element(static_cast<id_t>(i)),
                                          g.element(static_cast<id_t>(j))};
            }
        }
    }
    return rep;
}

/// Both directions of the normality criterion: H is normal in G iff for
/// every cyclic D <= G all D-orbits on H\G have equal length. For non-normal
/// H the witness phi in H, phi not in g^-1 H g is exhibited, with its orbit
/// lengths 1 and > 1.
struct NormalityReport : VerifyReport {
    bool is_normal = false;
    bool uniform_orbits = false;
    std::optional<Perm> witness_phi;
    std::optional<Perm> witness_g;
    int witness_fixed_orbit = 0;
    int witness_long_orbit = 0;
};

inline NormalityReport verify_normality_criterion(const PermGroup& g, const PermGroup& h) {
    NormalityReport rep;
    const auto h_ids = g.locate(h);
    rep.is_normal = detail::is_normal_ids(g, h_ids);

    const auto cs = detail::right_cosets(g, h_ids);
    rep.uniform_orbits = true;
    for (std::size_t x = 0; x < g.order(); ++x) {
        ++rep.checks;
        FactorType lengths = detail::orbit_lengths_of_cyclic(g, cs, static_cast<id_t>(x));
        const auto& parts = lengths.parts();
        if (parts.front() != parts.back()) rep.uniform_orbits = false;
    }
    if (rep.is_normal != rep.uniform_orbits)
        rep.fail("normality and orbit-length uniformity disagree");

    if (!rep.is_normal) {
        // the witness from the "if" direction: phi in H but phi not in g^-1 H g
        bool found = false;
        for (std::size_t gx = 0; gx < g.order() && !found; ++gx) {
            const auto conj = detail::conjugate_ids(g, h_ids, g.inv(static_cast<id_t>(gx)));
            if (conj == h_ids) continue;
            for (id_t phi : h_ids) {
                if (phi == g.identity_id()) continue;
                if (detail::idset_contains(conj, phi)) continue;
                // D = <phi>: the coset H·1 is fixed, the coset Hg is not
                const int coset_of_identity = cs.coset_of[g.identity_id()];
                const int coset_of_g = cs.coset_of[gx];
                int fixed_len = 0, long_len = 0;
                {
                    // orbit of the identity coset
                    int cur = coset_of_identity;
                    do {
                        ++fixed_len;
                        cur = cs.coset_of[g.mul(cs.cosets[static_cast<std::size_t>(cur)].front(), phi)];
                    } while (cur != coset_of_identity);
                    cur = coset_of_g;
                    do {
                        ++long_len;
                        cur = cs.coset_of[g.mul(cs.cosets[static_cast<std::size_t>(cur)].front(), phi)];
                    } while (cur != coset_of_g);
                }
                ++rep.checks;
                rep.witness_phi = g.element(phi);
                rep.witness_g = g.element(static_cast<id_t>(gx));
                rep.witness_fixed_orbit = fixed_len;
                rep.witness_long_orbit = long_len;
                if (fixed_len != 1 || long_len <= 1)
                    rep.fail("witness orbits do not exhibit lengths 1 and > 1");
                found = true;
                break;
            }
        }
        if (!found) rep.fail("no witness phi, g found for non-normal H");
    }
    return rep;
}

/// For transitive G with H = Stab(1): the orbit-length multiset of H\G under
/// <phi> equals the cycle type of phi for every phi; the stabilizers of all
/// points have index n and form a single complete conjugacy class.
inline VerifyReport verify_cycle_orbit_correspondence(const PermGroup& g) {
    if (!g.is_transitive())
        throw std::invalid_argument("verify_cycle_orbit_correspondence: group must be transitive");
    VerifyReport rep;
    const int n = g.degree();

    std::vector<detail::IdSet> stab(static_cast<std::size_t>(n));
    for (std::size_t x = 0; x < g.order(); ++x)
        for (int w = 0; w < n; ++w)
            if (g.element(static_cast<id_t>(x))(w) == w)
                stab[static_cast<std::size_t>(w)].push_back(static_cast<id_t>(x));

    for (int w = 0; w < n; ++w) {
        ++rep.checks;
        if (stab[static_cast<std::size_t>(w)].size() * static_cast<std::size_t>(n) != g.order())
            rep.fail("[G : Stab(w)] != n");
    }
    // the stabilizers are exactly the conjugates of Stab(1)
    for (std::size_t x = 0; x < g.order(); ++x) {
        ++rep.checks;
        const auto conj = detail::conjugate_ids(g, stab[0], static_cast<id_t>(x));
        const int moved_to = g.element(static_cast<id_t>(x))(0);
        if (conj != stab[static_cast<std::size_t>(moved_to)])
            rep.fail("g Stab(1) g^-1 != Stab(g(1))");
    }

    const auto cs = detail::right_cosets(g, stab[0]);
    for (std::size_t x = 0; x < g.order(); ++x) {
        ++rep.checks;
        FactorType lengths = detail::orbit_lengths_of_cyclic(g, cs, static_cast<id_t>(x));
        if (!(lengths == g.cycle_type_of(static_cast<id_t>(x)))) {
            std::ostringstream os;
            os << "orbit lengths " << lengths << " != cycle type "
               << g.cycle_type_of(static_cast<id_t>(x)) << " for "
               << g.element(static_cast<id_t>(x));
            rep.fail(os.str());
        }
    }
    return rep;
}

/// One line of the group-theory verification sweep.
struct SuiteLine {
    std::string name;
    bool pass = false;
    long checks = 0;
    std::string detail;
};

/// Runs the full brute-force verification sweep:
///  - double-coset identities for every subgroup pair of S4,
///  - the stabilizer-orbit refinement for every (H, D, E normal in D) of S4,
///  - the division/orbit-signature equivalence for every transitive subgroup
///    of S3..S{degree_max},
///  - the normality criterion for every subgroup of S4,
///  - the cycle-type/orbit-length correspondence for every element of every
///    transitive subgroup of S3..S{degree_max}.
inline std::vector<SuiteLine> run_group_theory_suite(int degree_max = 5) {
    if (degree_max < 4 || degree_max > 5)
        throw std::invalid_argument("run_group_theory_suite: degree_max must be 4 or 5");
    std::vector<SuiteLine> out;

    const PermGroup s4 = PermGroup::symmetric(4);
    const auto s4_subs = all_subgroups(s4);

    {
        SuiteLine line{"double-coset identities, all subgroup pairs of S4", true, 0, ""};
        for (const auto& h : s4_subs) {
            for (const auto& d : s4_subs) {
                auto rep = verify_double_coset_identities(s4, h, d);
                line.checks += rep.checks;
                if (!rep.pass) {
                    line.pass = false;
                    if (line.detail.empty()) line.detail = rep.failure;
                }
            }
        }
        if (line.pass) {
            std::ostringstream os;
            os << s4_subs.size() << "^2 subgroup pairs";
            line.detail = os.str();
        }
        out.push_back(std::move(line));
    }

    {
        SuiteLine line{"stabilizer-orbit refinement (E normal in D), S4 sweep", true, 0, ""};
        long combos = 0;
        for (const auto& d : s4_subs) {
            const auto d_subs = all_subgroups(d);
            for (const auto& e : d_subs) {
                if (!detail::is_normal_ids(d, d.locate(e))) continue;
                for (const auto& h : s4_subs) {
                    auto rep = verify_stabilizer_orbit_lemma(s4, d, e, h);
                    line.checks += rep.checks;
                    ++combos;
                    if (!rep.pass) {
                        line.pass = false;
                        if (line.detail.empty()) line.detail = rep.failure;
                    }
                }
            }
        }
        if (line.pass) {
            std::ostringstream os;
            os << combos << " (H, D, E) triples";
            line.detail = os.str();
        }
        out.push_back(std::move(line));
    }

    {
        SuiteLine line{"division/orbit-signature equivalence, transitive subgroups", true, 0, ""};
        long groups = 0;
        for (int n = 3; n <= degree_max; ++n) {
            for (const auto& row : transitive_subgroups(n)) {
                auto rep = verify_lagarias_equivalence(row.group);
                line.checks += rep.checks;
                ++groups;
                if (!rep.pass) {
                    line.pass = false;
                    if (line.detail.empty())
                        line.detail = row.name + ": " + rep.failure;
                }
            }
        }
        if (line.pass) {
            std::ostringstream os;
            os << groups << " transitive groups, subgroup lattices exhaustive";
            line.detail = os.str();
        }
        out.push_back(std::move(line));
    }

    {
        SuiteLine line{"normality criterion (both directions), all subgroups of S4", true, 0, ""};
        long witnesses = 0;
        for (const auto& h : s4_subs) {
            auto rep = verify_normality_criterion(s4, h);
            line.checks += rep.checks;
            if (rep.witness_phi) ++witnesses;
            if (!rep.pass) {
                line.pass = false;
                if (line.detail.empty()) line.detail = rep.failure;
            }
        }
        if (line.pass) {
            std::ostringstream os;
            os << s4_subs.size() << " subgroups, " << witnesses << " non-normal witnesses exhibited";
            line.detail = os.str();
        }
        out.push_back(std::move(line));
    }

    {
        SuiteLine line{"cycle-type/orbit-length correspondence, transitive subgroups", true, 0, ""};
        long groups = 0;
        for (int n = 3; n <= degree_max; ++n) {
            for (const auto& row : transitive_subgroups(n)) {
                auto rep = verify_cycle_orbit_correspondence(row.group);
                line.checks += rep.checks;
                ++groups;
                if (!rep.pass) {
                    line.pass = false;
                    if (line.detail.empty())
                        line.detail = row.name + ": " + rep.failure;
                }
            }
        }
        if (line.pass) {
            std::ostringstream os;
            os << groups << " transitive groups, every element checked";
            line.detail = os.str();
        }
        out.push_back(std::move(line));
    }

    return out;
}

} // namespace galid

#endif // GALID_GROUP_VERIFY_HPP
