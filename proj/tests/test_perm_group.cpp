#include <catch2/catch_amalgamated.hpp>

#include <galid/perm_group.hpp>

using galid::FactorType;
using galid::Perm;
using galid::PermGroup;

TEST_CASE("Perm basics") {
    REQUIRE(Perm::cycles(4, {{1, 2}, {3, 4}}).cycle_type() == FactorType{2, 2});
    REQUIRE(Perm::identity(4).cycle_type() == FactorType{1, 1, 1, 1});
    REQUIRE(Perm::cycles(5, {{1, 2, 3, 4, 5}}).cycle_type() == FactorType{5});

    const Perm a = Perm::cycles(3, {{1, 2}});
    const Perm b = Perm::cycles(3, {{1, 2, 3}});
    REQUIRE((a * a).is_identity());
    REQUIRE((b * b * b).is_identity());
    REQUIRE(a.inverse() == a);
    REQUIRE(b.inverse() == b * b);
    // composition applies the right factor first: ((1 2)(1 2 3))(1) = 1
    REQUIRE((a * b)(0) == 0);

    REQUIRE(Perm::cycles(5, {{1, 3, 5}}).str() == "(1 3 5)");
    REQUIRE(Perm::identity(3).str() == "()");

    REQUIRE(Perm::cycles(4, {{1, 2}}).sign() == -1);
    REQUIRE(Perm::cycles(4, {{1, 2}, {3, 4}}).sign() == 1);
    REQUIRE_THROWS_AS(Perm::from_one_based({1, 1, 3}), std::invalid_argument);
}

TEST_CASE("generate_group") {
    SECTION("a 3-cycle generates a group of order 3") {
        REQUIRE(PermGroup::generate({Perm::cycles(3, {{1, 2, 3}})}, 3).order() == 3);
    }
    SECTION("the holomorph of Z5 has order 20") {
        PermGroup g = PermGroup::generate(
            {Perm::cycles(5, {{1, 2, 3, 4, 5}}), Perm::cycles(5, {{2, 3, 5, 4}})}, 5);
        REQUIRE(g.order() == 20);
        REQUIRE(g.is_transitive());
    }
    SECTION("no generators give the trivial group") {
        PermGroup g = PermGroup::generate({}, 4);
        REQUIRE(g.order() == 1);
        REQUIRE(g.elements().front().is_identity());
    }
    SECTION("degree mismatch is rejected") {
        REQUIRE_THROWS_AS(PermGroup::generate({Perm::identity(3)}, 4), std::invalid_argument);
    }
    SECTION("symmetric groups have the right orders") {
        REQUIRE(PermGroup::symmetric(3).order() == 6);
        REQUIRE(PermGroup::symmetric(4).order() == 24);
        REQUIRE(PermGroup::symmetric(5).order() == 120);
    }
}

TEST_CASE("cycle_type_set matches the published rows") {
    SECTION("A3") {
        PermGroup a3 = PermGroup::generate({Perm::cycles(3, {{1, 2, 3}})}, 3);
        REQUIRE(cycle_type_set(a3) == std::set<FactorType>{FactorType{1, 1, 1}, FactorType{3}});
    }
    SECTION("Z4 in S4") {
        PermGroup z4 = PermGroup::generate({Perm::cycles(4, {{1, 2, 3, 4}})}, 4);
        REQUIRE(cycle_type_set(z4) ==
                std::set<FactorType>{FactorType{1, 1, 1, 1}, FactorType{2, 2}, FactorType{4}});
    }
    SECTION("Hol(Z5)") {
        PermGroup f20 = PermGroup::generate(
            {Perm::cycles(5, {{1, 2, 3, 4, 5}}), Perm::cycles(5, {{2, 3, 5, 4}})}, 5);
        REQUIRE(cycle_type_set(f20) ==
                std::set<FactorType>{FactorType{1, 1, 1, 1, 1}, FactorType{1, 2, 2},
                                     FactorType{1, 4}, FactorType{5}});
    }
    SECTION("non-transitive groups are rejected") {
        PermGroup h = PermGroup::generate({Perm::cycles(4, {{1, 2}})}, 4);
        REQUIRE_THROWS_AS(cycle_type_set(h), std::invalid_argument);
    }
}

TEST_CASE("transitive_subgroups") {
    SECTION("degree 3: A3 and S3") {
        const auto& rows = galid::transitive_subgroups(3);
        REQUIRE(rows.size() == 2);
        REQUIRE(rows[0].name == "A3");
        REQUIRE(rows[0].group.order() == 3);
        REQUIRE(rows[1].name == "S3");
        REQUIRE(rows[1].group.order() == 6);
    }
    SECTION("degree 4: the five candidates") {
        const auto& rows = galid::transitive_subgroups(4);
        REQUIRE(rows.size() == 5);
        std::vector<std::string> names;
        std::vector<std::size_t> orders;
        for (const auto& r : rows) {
            names.push_back(r.name);
            orders.push_back(r.group.order());
        }
        REQUIRE(names == std::vector<std::string>{"Z4", "Z2xZ2", "D4", "A4", "S4"});
        REQUIRE(orders == std::vector<std::size_t>{4, 4, 8, 12, 24});
    }
    SECTION("degree 5: the five candidates") {
        const auto& rows = galid::transitive_subgroups(5);
        REQUIRE(rows.size() == 5);
        std::vector<std::string> names;
        for (const auto& r : rows) names.push_back(r.name);
        REQUIRE(names == std::vector<std::string>{"Z5", "D5", "Hol(Z5)", "A5", "S5"});
    }
    SECTION("degree out of range") {
        REQUIRE_THROWS_AS(galid::transitive_subgroups(6), std::invalid_argument);
        REQUIRE_THROWS_AS(galid::transitive_subgroups(2), std::invalid_argument);
    }
    SECTION("every listed group is transitive, with the right degree") {
        for (int n = 3; n <= 5; ++n) {
            for (const auto& r : galid::transitive_subgroups(n)) {
                REQUIRE(r.group.degree() == n);
                REQUIRE(r.group.is_transitive());
            }
        }
    }
}

TEST_CASE("divisions") {
    SECTION("S3 splits into 3 divisions") {
        const auto div = galid::divisions(PermGroup::symmetric(3));
        REQUIRE(div.size() == 3);
        std::multiset<std::size_t> sizes;
        for (const auto& d : div) sizes.insert(d.size());
        REQUIRE(sizes == std::multiset<std::size_t>{1, 2, 3});
    }
    SECTION("Z4 splits by element order") {
        PermGroup z4 = PermGroup::generate({Perm::cycles(4, {{1, 2, 3, 4}})}, 4);
        const auto div = galid::divisions(z4);
        REQUIRE(div.size() == 3);
        std::multiset<std::size_t> sizes;
        for (const auto& d : div) sizes.insert(d.size());
        // identity; the order-2 element; the two 4-cycles share one division
        REQUIRE(sizes == std::multiset<std::size_t>{1, 1, 2});
    }
    SECTION("for S4, divisions coincide with the 5 conjugacy classes") {
        const auto div = galid::divisions(PermGroup::symmetric(4));
        REQUIRE(div.size() == 5);
        for (const auto& d : div) {
            const FactorType t = d.front().cycle_type();
            for (const Perm& p : d) REQUIRE(p.cycle_type() == t);
        }
    }
    SECTION("divisions partition the group") {
        for (int n = 3; n <= 5; ++n) {
            PermGroup g = PermGroup::symmetric(n);
            std::size_t total = 0;
            for (const auto& d : galid::divisions(g)) total += d.size();
            REQUIRE(total == g.order());
        }
    }
}

TEST_CASE("coset_orbit_decomposition") {
    const PermGroup s3 = PermGroup::symmetric(3);
    const PermGroup h = PermGroup::generate({Perm::cycles(3, {{1, 2}})}, 3);

    SECTION("rotation acts transitively on the three cosets") {
        const PermGroup d = PermGroup::generate({Perm::cycles(3, {{1, 2, 3}})}, 3);
        const auto dec = galid::coset_orbit_decomposition(s3, h, d);
        REQUIRE(dec.lengths == FactorType{3});
        REQUIRE(dec.orbits.size() == 1);
        REQUIRE(dec.orbits[0].size() == 3);
        for (const auto& coset : dec.orbits[0]) REQUIRE(coset.size() == 2);
    }
    SECTION("H acting on its own cosets fixes one and swaps two") {
        const auto dec = galid::coset_orbit_decomposition(s3, h, h);
        REQUIRE(dec.lengths == FactorType{1, 2});
    }
    SECTION("H = G gives a single orbit of length 1") {
        const auto dec = galid::coset_orbit_decomposition(s3, s3, h);
        REQUIRE(dec.lengths == FactorType{1});
    }
    SECTION("orbit lengths sum to the index, across all of S4") {
        const PermGroup s4 = PermGroup::symmetric(4);
        for (const auto& hh : galid::all_subgroups(s4)) {
            for (const auto& dd : galid::all_subgroups(s4)) {
                const auto dec = galid::coset_orbit_decomposition(s4, hh, dd);
                REQUIRE(dec.lengths.sum() == static_cast<int>(s4.order() / hh.order()));
            }
        }
    }
    SECTION("non-subgroup inputs are rejected") {
        const PermGroup z4 = PermGroup::generate({Perm::cycles(4, {{1, 2, 3, 4}})}, 4);
        REQUIRE_THROWS_AS(galid::coset_orbit_decomposition(s3, z4, h), std::invalid_argument);
    }
}

TEST_CASE("all_subgroups enumerates the full lattice") {
    REQUIRE(galid::all_subgroups(PermGroup::symmetric(3)).size() == 6);
    REQUIRE(galid::all_subgroups(PermGroup::symmetric(4)).size() == 30);
    PermGroup a4 =
        PermGroup::generate({Perm::cycles(4, {{1, 2, 3}}), Perm::cycles(4, {{1, 2}, {3, 4}})}, 4);
    REQUIRE(a4.order() == 12);
    REQUIRE(galid::all_subgroups(a4).size() == 10);
}

TEST_CASE("expected_type_densities") {
    SECTION("S3") {
        const auto d = galid::expected_type_densities(PermGroup::symmetric(3));
        REQUIRE(d.at(FactorType{1, 1, 1}) == galid::BigRat(1, 6));
        REQUIRE(d.at(FactorType{1, 2}) == galid::BigRat(1, 2));
        REQUIRE(d.at(FactorType{3}) == galid::BigRat(1, 3));
    }
    SECTION("A3") {
        PermGroup a3 = PermGroup::generate({Perm::cycles(3, {{1, 2, 3}})}, 3);
        const auto d = galid::expected_type_densities(a3);
        REQUIRE(d.at(FactorType{1, 1, 1}) == galid::BigRat(1, 3));
        REQUIRE(d.at(FactorType{3}) == galid::BigRat(2, 3));
    }
    SECTION("densities sum to exactly 1 for every candidate group") {
        for (int n = 3; n <= 5; ++n) {
            for (const auto& row : galid::transitive_subgroups(n)) {
                galid::BigRat sum = 0;
                for (const auto& [t, v] : galid::expected_type_densities(row.group)) sum += v;
                REQUIRE(sum == galid::BigRat(1));
            }
        }
    }
    SECTION("non-transitive groups are rejected") {
        PermGroup h = PermGroup::generate({Perm::cycles(3, {{1, 2}})}, 3);
        REQUIRE_THROWS_AS(galid::expected_type_densities(h), std::invalid_argument);
    }
}
