#ifndef GALID_GROUP_TABLES_HPP
#define GALID_GROUP_TABLES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "galid/perm_group.hpp"

namespace galid {

/// One candidate group of a determination table: its name, order, full set
/// of cycle types, parity (whether it lies inside the alternating group),
/// and its Chebotarev densities.
struct TableRow {
    std::string name;
    std::size_t order = 0;
    std::set<FactorType> types;
    bool inside_alternating = false;
    std::map<FactorType, BigRat> densities;
};

/// Determination table for one degree, recomputed from the group engine and
/// versioned for serialization.
struct DeterminationTable {
    static constexpr int kVersion = 1;
    int degree = 0;
    std::vector<TableRow> rows;

    const TableRow* find(const std::string& name) const {
        for (const auto& r : rows)
            if (r.name == name) return &r;
        return nullptr;
    }
};

namespace detail {

inline DeterminationTable compute_determination_table(int n) {
    DeterminationTable table;
    table.degree = n;
    for (const auto& named : transitive_subgroups(n)) {
        TableRow row;
        row.name = named.name;
        row.order = named.group.order();
        row.types = cycle_type_set(named.group);
        row.inside_alternating = true;
        for (const Perm& p : named.group.elements())
            if (p.sign() < 0) { row.inside_alternating = false; break; }
        row.densities = expected_type_densities(named.group);
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace detail

/// The degree-n determination table (n in 3..5), computed once and cached.
inline const DeterminationTable& determination_table(int n) {
    if (n < 3 || n > 5)
        throw std::invalid_argument("determination_table: degree must be 3, 4, or 5");
    static const DeterminationTable deg3 = detail::compute_determination_table(3);
    static const DeterminationTable deg4 = detail::compute_determination_table(4);
    static const DeterminationTable deg5 = detail::compute_determination_table(5);
    switch (n) {
    case 3: return deg3;
    case 4: return deg4;
    default: return deg5;
    }
}

} // namespace galid

#endif // GALID_GROUP_TABLES_HPP
