#ifndef GALID_PERM_GROUP_HPP
#define GALID_PERM_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galid/factor_type.hpp"
#include "galid/int_poly.hpp" // BigRat
#include "galid/perm.hpp"

namespace galid {

/// Finite permutation group held as an explicit, sorted element list.
/// Groups of the sizes this library works with (<= 120 elements) also carry
/// a full multiplication table, so orbit and coset machinery runs on small
/// integer ids. Immutable after construction.
class PermGroup {
public:
    using id_t = std::uint16_t;

    /// Closure of the generators under composition. The empty generator set
    /// yields the trivial group.
    static PermGroup generate(std::vector<Perm> gens, int degree) {
        for (const Perm& g : gens)
            if (g.degree() != degree)
                throw std::invalid_argument("PermGroup::generate: generator degree mismatch");
        std::set<Perm> closure;
        std::vector<Perm> frontier;
        closure.insert(Perm::identity(degree));
        frontier.push_back(Perm::identity(degree));
        while (!frontier.empty()) {
            Perm cur = std::move(frontier.back());
            frontier.pop_back();
            for (const Perm& g : gens) {
                Perm nxt = g * cur;
                if (closure.insert(nxt).second) frontier.push_back(std::move(nxt));
            }
        }
        return PermGroup(degree, std::vector<Perm>(closure.begin(), closure.end()), std::move(gens));
    }

    static PermGroup trivial(int degree) { return generate({}, degree); }

    static PermGroup symmetric(int degree) {
        if (degree < 1) throw std::invalid_argument("PermGroup::symmetric: degree must be >= 1");
        if (degree == 1) return trivial(1);
        std::vector<Perm> gens;
        gens.push_back(Perm::cycles(degree, {{1, 2}}));
        if (degree > 2) {
            std::vector<int> rot(static_cast<std::size_t>(degree));
            for (int i = 0; i < degree; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % degree + 1;
            gens.push_back(Perm::from_one_based(rot));
        }
        return generate(std::move(gens), degree);
    }

    int degree() const noexcept { return degree_; }
    std::size_t order() const noexcept { return elems_.size(); }

    const std::vector<Perm>& elements() const noexcept { return elems_; }
    const std::vector<Perm>& generators() const noexcept { return gens_; }

    const Perm& element(id_t id) const { return elems_[id]; }

    /// Index in the sorted element list; -1 if absent.
    int index_of(const Perm& p) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
        if (it == elems_.end() || !(*it == p)) return -1;
        return static_cast<int>(it - elems_.begin());
    }

    bool contains(const Perm& p) const { return index_of(p) >= 0; }

    id_t identity_id() const { return id_; }

    id_t mul(id_t a, id_t b) const {
        if (!mul_.empty()) return mul_[static_cast<std::size_t>(a) * order() + b];
        return static_cast<id_t>(index_of(elems_[a] * elems_[b]));
    }

    id_t inv(id_t a) const {
        if (!inv_.empty()) return inv_[a];
        return static_cast<id_t>(index_of(elems_[a].inverse()));
    }

    const FactorType& cycle_type_of(id_t a) const { return ctypes_[a]; }

    bool is_transitive() const {
        // the orbit of a point under a full group is just its element images
        std::vector<bool> reached(static_cast<std::size_t>(degree_), false);
        int count = 0;
        for (const Perm& p : elems_) {
            int to = p(0);
            if (!reached[static_cast<std::size_t>(to)]) {
                reached[static_cast<std::size_t>(to)] = true;
                ++count;
            }
        }
        return count == degree_;
    }

    bool contains_group(const PermGroup& h) const {
        if (h.degree() != degree_) return false;
        for (const Perm& p : h.elements())
            if (!contains(p)) return false;
        return true;
    }

    /// Ids of h's elements within this group; throws if h is not a subgroup.
    std::vector<id_t> locate(const PermGroup& h) const {
        if (h.degree() != degree_)
            throw std::invalid_argument("PermGroup::locate: degree mismatch");
        std::vector<id_t> ids;
        ids.reserve(h.order());
        for (const Perm& p : h.elements()) {
            int i = index_of(p);
            if (i < 0) throw std::invalid_argument("PermGroup::locate: not a subgroup (element missing)");
            ids.push_back(static_cast<id_t>(i));
        }
        return ids; // sorted because h.elements() is sorted and order embeds
    }

    /// Materializes a subgroup given by ids of this group (assumed closed).
    PermGroup subgroup_from_ids(const std::vector<id_t>& ids, std::vector<Perm> gens = {}) const {
        std::vector<Perm> elems;
        elems.reserve(ids.size());
        for (id_t i : ids) elems.push_back(elems_[i]);
        std::sort(elems.begin(), elems.end());
        return PermGroup(degree_, std::move(elems), std::move(gens));
    }

    bool operator==(const PermGroup& g) const noexcept {
        return degree_ == g.degree_ && elems_ == g.elems_;
    }

private:
    PermGroup(int degree, std::vector<Perm> sorted_elems, std::vector<Perm> gens)
        : degree_(degree), elems_(std::move(sorted_elems)), gens_(std::move(gens)) {
        if (elems_.empty() || !std::is_sorted(elems_.begin(), elems_.end()))
            throw std::logic_error("PermGroup: element list must be sorted and nonempty");
        if (elems_.size() > 65535)
            throw std::invalid_argument("PermGroup: groups beyond 65535 elements are not supported");
        // n! must be a multiple of the order (Lagrange); cheap sanity check
        // for the degrees in range here.
        if (degree_ <= 12) {
            std::uint64_t fact = 1;
            for (int i = 2; i <= degree_; ++i) fact *= static_cast<std::uint64_t>(i);
            if (fact % elems_.size() != 0)
                throw std::logic_error("PermGroup: order does not divide n!");
        }
        int idx = index_of(Perm::identity(degree_));
        if (idx < 0) throw std::logic_error("PermGroup: identity missing");
        id_ = static_cast<id_t>(idx);

        ctypes_.reserve(elems_.size());
        for (const Perm& p : elems_) ctypes_.push_back(p.cycle_type());

        if (order() <= 2048) {
            mul_.resize(order() * order());
            inv_.resize(order());
            for (std::size_t a = 0; a < order(); ++a) {
                for (std::size_t b = 0; b < order(); ++b) {
                    int k = index_of(elems_[a] * elems_[b]);
                    if (k < 0) throw std::logic_error("PermGroup: element list not closed");
                    mul_[a * order() + b] = static_cast<id_t>(k);
                    if (static_cast<id_t>(k) == id_) {
                        inv_[a] = static_cast<id_t>(b);
                    }
                }
            }
        }
    }

    int degree_ = 0;
    std::vector<Perm> elems_;
    std::vector<Perm> gens_;
    std::vector<id_t> mul_;
    std::vector<id_t> inv_;
    std::vector<FactorType> ctypes_;
    id_t id_ = 0;
};

namespace detail {

using id_t = PermGroup::id_t;
using IdSet = std::vector<id_t>; // sorted element ids relative to a parent group

inline bool idset_contains(const IdSet& s, id_t x) {
    return std::binary_search(s.begin(), s.end(), x);
}

/// Closure of `seed` under the parent group's multiplication.
inline IdSet closure_ids(const PermGroup& g, IdSet seed) {
    std::vector<bool> in(g.order(), false);
    std::vector<id_t> frontier;
    auto push = [&](id_t x) {
        if (!in[x]) {
            in[x] = true;
            frontier.push_back(x);
        }
    };
    push(g.identity_id());
    for (id_t x : seed) push(x);
    IdSet gens = std::move(seed);
    for (std::size_t k = 0; k < frontier.size(); ++k) {
        id_t cur = frontier[k];
        for (id_t gen : gens) push(g.mul(gen, cur));
    }
    IdSet out;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (in[i]) out.push_back(static_cast<id_t>(i));
    return out;
}

inline IdSet conjugate_ids(const PermGroup& g, const IdSet& s, id_t by) {
    IdSet out;
    out.reserve(s.size());
    const id_t byi = g.inv(by);
    for (id_t x : s) out.push_back(g.mul(g.mul(by, x), byi));
    std::sort(out.begin(), out.end());
    return out;
}

/// Lexicographically least conjugate of the subgroup's id set under the
/// parent group; canonical form for conjugacy classes of subgroups.
inline IdSet canonical_conjugate(const PermGroup& g, const IdSet& s) {
    IdSet best = s;
    for (std::size_t by = 0; by < g.order(); ++by) {
        IdSet cand = conjugate_ids(g, s, static_cast<id_t>(by));
        if (cand < best) best = cand;
    }
    return best;
}

inline bool is_normal_ids(const PermGroup& g, const IdSet& s) {
    for (std::size_t by = 0; by < g.order(); ++by)
        if (conjugate_ids(g, s, static_cast<id_t>(by)) != s) return false;
    return true;
}

/// All subgroups of g as sorted id sets, by fixpoint extension: every
/// subgroup arises from a smaller one by adjoining one more element, so
/// repeatedly extending until nothing new appears enumerates the full
/// lattice. Output sorted by (order, ids).
inline std::vector<IdSet> subgroup_lattice_ids(const PermGroup& g) {
    std::set<IdSet> seen;
    std::vector<IdSet> queue;
    IdSet triv{g.identity_id()};
    seen.insert(triv);
    queue.push_back(triv);
    for (std::size_t k = 0; k < queue.size(); ++k) {
        IdSet cur = queue[k]; // copy: queue may reallocate
        if (cur.size() == g.order()) continue;
        for (std::size_t x = 0; x < g.order(); ++x) {
            if (idset_contains(cur, static_cast<id_t>(x))) continue;
            IdSet seed = cur;
            seed.push_back(static_cast<id_t>(x));
            IdSet ext = closure_ids(g, std::move(seed));
            if (seen.insert(ext).second) queue.push_back(std::move(ext));
        }
    }
    std::vector<IdSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const IdSet& a, const IdSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

/// Right cosets H\g: coset index per element, cosets listed by ascending
/// canonical (minimal) member id, each coset's ids sorted.
struct CosetSpace {
    std::vector<int> coset_of;                 // element id -> coset index
    std::vector<IdSet> cosets;                 // sorted ids; front is canonical rep
};

inline CosetSpace right_cosets(const PermGroup& g, const IdSet& h) {
    CosetSpace cs;
    cs.coset_of.assign(g.order(), -1);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (cs.coset_of[x] >= 0) continue;
        IdSet coset;
        coset.reserve(h.size());
        for (id_t hh : h) coset.push_back(g.mul(hh, static_cast<id_t>(x)));
        std::sort(coset.begin(), coset.end());
        int idx = static_cast<int>(cs.cosets.size());
        for (id_t m : coset) cs.coset_of[m] = idx;
        cs.cosets.push_back(std::move(coset));
    }
    // canonical order: by minimal member id; cosets are discovered in that
    // order already because x sweeps ascending, but keep the sort explicit.
    std::vector<std::size_t> perm(cs.cosets.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return cs.cosets[a].front() < cs.cosets[b].front();
    });
    std::vector<IdSet> sorted;
    sorted.reserve(cs.cosets.size());
    std::vector<int> newindex(cs.cosets.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        newindex[perm[i]] = static_cast<int>(i);
        sorted.push_back(std::move(cs.cosets[perm[i]]));
    }
    cs.cosets = std::move(sorted);
    for (int& c : cs.coset_of) c = newindex[static_cast<std::size_t>(c)];
    return cs;
}

/// Orbits of the right-translation action of the subgroup `d` on the coset
/// space, as lists of coset indices; orbit order is by smallest coset index,
/// indices within an orbit ascending.
inline std::vector<std::vector<int>> coset_orbits_under(const PermGroup& g, const CosetSpace& cs,
                                                        const IdSet& d) {
    const std::size_t nc = cs.cosets.size();
    std::vector<int> orbit_of(nc, -1);
    std::vector<std::vector<int>> orbits;
    for (std::size_t c0 = 0; c0 < nc; ++c0) {
        if (orbit_of[c0] >= 0) continue;
        std::vector<int> orbit{static_cast<int>(c0)};
        orbit_of[c0] = static_cast<int>(orbits.size());
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            id_t rep = cs.cosets[static_cast<std::size_t>(orbit[k])].front();
            for (id_t dd : d) {
                int to = cs.coset_of[g.mul(rep, dd)];
                if (orbit_of[static_cast<std::size_t>(to)] < 0) {
                    orbit_of[static_cast<std::size_t>(to)] = static_cast<int>(orbits.size());
                    orbit.push_back(to);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

/// Left cosets g/D and the left-translation orbits of a subgroup on them.
inline CosetSpace left_cosets(const PermGroup& g, const IdSet& d) {
    CosetSpace cs;
    cs.coset_of.assign(g.order(), -1);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (cs.coset_of[x] >= 0) continue;
        IdSet coset;
        coset.reserve(d.size());
        for (id_t dd : d) coset.push_back(g.mul(static_cast<id_t>(x), dd));
        std::sort(coset.begin(), coset.end());
        int idx = static_cast<int>(cs.cosets.size());
        for (id_t m : coset) cs.coset_of[m] = idx;
        cs.cosets.push_back(std::move(coset));
    }
    std::vector<std::size_t> perm(cs.cosets.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return cs.cosets[a].front() < cs.cosets[b].front();
    });
    std::vector<IdSet> sorted;
    sorted.reserve(cs.cosets.size());
    std::vector<int> newindex(cs.cosets.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        newindex[perm[i]] = static_cast<int>(i);
        sorted.push_back(std::move(cs.cosets[perm[i]]));
    }
    cs.cosets = std::move(sorted);
    for (int& c : cs.coset_of) c = newindex[static_cast<std::size_t>(c)];
    return cs;
}

inline std::vector<std::vector<int>> left_coset_orbits_under(const PermGroup& g,
                                                             const CosetSpace& cs,
                                                             const IdSet& h) {
    const std::size_t nc = cs.cosets.size();
    std::vector<int> orbit_of(nc, -1);
    std::vector<std::vector<int>> orbits;
    for (std::size_t c0 = 0; c0 < nc; ++c0) {
        if (orbit_of[c0] >= 0) continue;
        std::vector<int> orbit{static_cast<int>(c0)};
        orbit_of[c0] = static_cast<int>(orbits.size());
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            id_t rep = cs.cosets[static_cast<std::size_t>(orbit[k])].front();
            for (id_t hh : h) {
                int to = cs.coset_of[g.mul(hh, rep)];
                if (orbit_of[static_cast<std::size_t>(to)] < 0) {
                    orbit_of[static_cast<std::size_t>(to)] = static_cast<int>(orbits.size());
                    orbit.push_back(to);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

/// Cyclic subgroup generated by one element.
inline IdSet cyclic_ids(const PermGroup& g, id_t x) {
    IdSet out{g.identity_id()};
    id_t cur = x;
    while (cur != g.identity_id()) {
        out.push_back(cur);
        cur = g.mul(cur, x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Orbit-length multiset of the right action of <phi> on H\g.
inline FactorType orbit_lengths_of_cyclic(const PermGroup& g, const CosetSpace& cs, id_t phi) {
    const std::size_t nc = cs.cosets.size();
    std::vector<bool> seen(nc, false);
    FactorType lengths;
    for (std::size_t c0 = 0; c0 < nc; ++c0) {
        if (seen[c0]) continue;
        int len = 0;
        std::size_t cur = c0;
        while (!seen[cur]) {
            seen[cur] = true;
            ++len;
            cur = static_cast<std::size_t>(cs.coset_of[g.mul(cs.cosets[cur].front(), phi)]);
        }
        lengths.add(len);
    }
    return lengths;
}

} // namespace detail

/// Orbits of the right action of a subgroup D on the right cosets H\G.
/// Cosets are stored as sorted element lists whose first entry is the
/// canonical (lexicographically least) representative.
struct OrbitDecomposition {
    std::vector<std::vector<std::vector<Perm>>> orbits;
    FactorType lengths;
};

inline OrbitDecomposition coset_orbit_decomposition(const PermGroup& g, const PermGroup& h,
                                                    const PermGroup& d) {
    const auto h_ids = g.locate(h);
    const auto d_ids = g.locate(d);
    const auto cs = detail::right_cosets(g, h_ids);
    const auto orbits = detail::coset_orbits_under(g, cs, d_ids);

    OrbitDecomposition out;
    for (const auto& orbit : orbits) {
        std::vector<std::vector<Perm>> cosets;
        for (int ci : orbit) {
            std::vector<Perm> coset;
            for (auto idx : cs.cosets[static_cast<std::size_t>(ci)])
                coset.push_back(g.element(idx));
            cosets.push_back(std::move(coset));
        }
        out.lengths.add(static_cast<int>(orbit.size()));
        out.orbits.push_back(std::move(cosets));
    }
    return out;
}

/// The set of cycle types over all elements of a transitive group.
inline std::set<FactorType> cycle_type_set(const PermGroup& g) {
    if (!g.is_transitive())
        throw std::invalid_argument("cycle_type_set: group must be transitive");
    std::set<FactorType> out;
    for (std::size_t i = 0; i < g.order(); ++i)
        out.insert(g.cycle_type_of(static_cast<PermGroup::id_t>(i)));
    return out;
}

/// Divisions of a group: phi_1 and phi_2 lie in the same division iff the
/// cyclic subgroups <phi_1> and <phi_2> are conjugate in the group. Classes
/// are ordered by their least element id.
inline std::vector<std::vector<Perm>> divisions(const PermGroup& g) {
    std::map<detail::IdSet, std::vector<PermGroup::id_t>> classes;
    for (std::size_t x = 0; x < g.order(); ++x) {
        const auto cyc = detail::cyclic_ids(g, static_cast<PermGroup::id_t>(x));
        classes[detail::canonical_conjugate(g, cyc)].push_back(static_cast<PermGroup::id_t>(x));
    }
    std::vector<std::vector<PermGroup::id_t>> ordered;
    for (auto& [key, members] : classes) ordered.push_back(members);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<std::vector<Perm>> out;
    for (const auto& cls : ordered) {
        std::vector<Perm> perms;
        for (auto idx : cls) perms.push_back(g.element(idx));
        out.push_back(std::move(perms));
    }
    return out;
}

/// Every subgroup of g, enumerated exhaustively, sorted by (order, elements).
inline std::vector<PermGroup> all_subgroups(const PermGroup& g) {
    std::vector<PermGroup> out;
    for (const auto& ids : detail::subgroup_lattice_ids(g))
        out.push_back(g.subgroup_from_ids(ids));
    return out;
}

/// Chebotarev densities at group level: density of a cycle type is the
/// proportion of group elements having it. Exact rationals summing to 1.
inline std::map<FactorType, BigRat> expected_type_densities(const PermGroup& g) {
    if (!g.is_transitive())
        throw std::invalid_argument("expected_type_densities: group must be transitive");
    std::map<FactorType, long> counts;
    for (std::size_t i = 0; i < g.order(); ++i)
        counts[g.cycle_type_of(static_cast<PermGroup::id_t>(i))]++;
    std::map<FactorType, BigRat> out;
    for (const auto& [t, c] : counts)
        out.emplace(t, BigRat(c, static_cast<long>(g.order())));
    return out;
}

/// One row of a degree-n determination table.
struct NamedGroup {
    std::string name;
    PermGroup group;
};

namespace detail {

inline std::vector<NamedGroup> compute_transitive_subgroups(int n);

} // namespace detail

/// Complete list of transitive subgroups of S_n up to conjugacy, n in 3..5,
/// recomputed from the subgroup lattice and tagged with standard names.
/// Rows are in ascending-order-of-group-order with the cyclic group first on
/// ties, which matches the usual presentation. Computed once per degree and
/// cached (the lists are immutable).
inline const std::vector<NamedGroup>& transitive_subgroups(int n) {
    if (n < 3 || n > 5)
        throw std::invalid_argument("transitive_subgroups: degree must be 3, 4, or 5");
    static const std::vector<NamedGroup> deg3 = detail::compute_transitive_subgroups(3);
    static const std::vector<NamedGroup> deg4 = detail::compute_transitive_subgroups(4);
    static const std::vector<NamedGroup> deg5 = detail::compute_transitive_subgroups(5);
    switch (n) {
    case 3: return deg3;
    case 4: return deg4;
    default: return deg5;
    }
}

namespace detail {

inline std::vector<NamedGroup> compute_transitive_subgroups(int n) {
    const PermGroup sym = PermGroup::symmetric(n);
    const auto lattice = detail::subgroup_lattice_ids(sym);

    // one representative per conjugacy class, transitive only
    std::set<detail::IdSet> canon_seen;
    std::vector<detail::IdSet> reps;
    for (const auto& ids : lattice) {
        auto canon = detail::canonical_conjugate(sym, ids);
        if (!canon_seen.insert(canon).second) continue;
        PermGroup sub = sym.subgroup_from_ids(canon);
        if (sub.is_transitive()) reps.push_back(std::move(canon));
    }

    struct NameKey {
        int degree;
        std::size_t order;
        bool has_full_cycle;
    };
    auto name_for = [n](std::size_t order, bool has_full_cycle) -> std::string {
        switch (n) {
        case 3:
            if (order == 3) return "A3";
            if (order == 6) return "S3";
            break;
        case 4:
            if (order == 4) return has_full_cycle ? "Z4" : "Z2xZ2";
            if (order == 8) return "D4";
            if (order == 12) return "A4";
            if (order == 24) return "S4";
            break;
        case 5:
            if (order == 5) return "Z5";
            if (order == 10) return "D5";
            if (order == 20) return "Hol(Z5)";
            if (order == 60) return "A5";
            if (order == 120) return "S5";
            break;
        }
        throw std::logic_error("transitive_subgroups: unexpected transitive subgroup signature");
    };

    std::vector<NamedGroup> out;
    for (const auto& ids : reps) {
        PermGroup sub = sym.subgroup_from_ids(ids);
        const auto types = cycle_type_set(sub);
        FactorType full({n});
        bool has_full = types.count(full) > 0;
        out.push_back(NamedGroup{name_for(sub.order(), has_full), std::move(sub)});
    }
    std::sort(out.begin(), out.end(), [](const NamedGroup& a, const NamedGroup& b) {
        if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
        return a.name < b.name; // only the Z4 / Z2xZ2 tie; Z2xZ2 < Z4
    });
    // present the cyclic group before Z2xZ2, as the tables are usually listed
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i].name == "Z2xZ2" && out[i + 1].name == "Z4")
            std::swap(out[i], out[i + 1]);

    // the (order, cycle-type-set) signature must be unique within the list
    std::set<std::pair<std::size_t, std::set<FactorType>>> signatures;
    for (const auto& row : out)
        if (!signatures.insert({row.group.order(), cycle_type_set(row.group)}).second)
            throw std::logic_error("transitive_subgroups: duplicate (order, type-set) signature");

    return out;
}

} // namespace detail

} // namespace galid

#endif // GALID_PERM_GROUP_HPP
