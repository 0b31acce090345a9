#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <galid/int_poly.hpp>
#include <galid/numeric.hpp>

#include "oracles.hpp"

using galid::BigInt;
using galid::BigRat;
using galid::IntPoly;

TEST_CASE("derivative") {
    REQUIRE(galid::derivative(IntPoly{-2, 0, 0, 1}) == IntPoly{0, 0, 3});
    REQUIRE(galid::derivative(IntPoly{5}) == IntPoly{});
    REQUIRE(galid::derivative(IntPoly{-1, -1, 0, 0, 0, 1}) == IntPoly{-1, 0, 0, 0, 5});
}

TEST_CASE("discriminant, worked examples") {
    REQUIRE(galid::discriminant(IntPoly{-2, 0, 0, 1}) == -108);
    REQUIRE(galid::discriminant(IntPoly{1, 0, 1}) == -4);
    REQUIRE(galid::discriminant(IntPoly{-1, -3, 0, 1}) == 81);
    REQUIRE(galid::discriminant(IntPoly{1, 0, 0, 0, 1}) == 256);       // x^4 + 1
    REQUIRE(galid::discriminant(IntPoly{-1, -1, 0, 0, 0, 1}) == 2869); // x^5 - x - 1
}

TEST_CASE("discriminant agrees with the closed forms on random polynomials") {
    std::mt19937 rng(20240811);
    auto coeff = [&]() { return static_cast<long long>(rng() % 19) - 9; };
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly cubic{coeff(), coeff(), coeff(), 1};
        REQUIRE(BigRat(galid::discriminant(cubic)) == oracles::cubic_disc_closed_form(cubic));
        IntPoly quartic{coeff(), coeff(), coeff(), coeff(), 1};
        REQUIRE(BigRat(galid::discriminant(quartic)) ==
                oracles::quartic_disc_closed_form(quartic));
    }
}

TEST_CASE("cauchy_root_bound") {
    REQUIRE(galid::cauchy_root_bound(IntPoly{1, 0, 1}) == BigRat(2));
    REQUIRE(galid::cauchy_root_bound(IntPoly{-2, 0, 0, 1}) == BigRat(3));
    REQUIRE(galid::cauchy_root_bound(IntPoly{-1, -1, 0, 0, 0, 1}) == BigRat(2));

    SECTION("all numeric roots stay within the bound") {
        const std::vector<IntPoly> fixtures = {
            IntPoly{1, 0, 1},           IntPoly{-2, 0, 0, 1},
            IntPoly{-1, -3, 0, 1},      IntPoly{1, 0, 0, 0, 1},
            IntPoly{-1, -1, 0, 0, 0, 1}, IntPoly{12, 8, 0, 0, 1},
            IntPoly{16, 20, 0, 0, 0, 1}};
        for (const IntPoly& c : fixtures) {
            const double bound = galid::cauchy_root_bound(c).convert_to<double>();
            for (const auto& r : galid::numeric_roots(c))
                REQUIRE(std::abs(r) <= bound + 1e-9);
        }
    }
}

TEST_CASE("numeric roots actually solve the polynomial") {
    const IntPoly c{-2, 0, 0, 1};
    for (const auto& r : galid::numeric_roots(c)) {
        std::complex<double> acc = 0;
        for (std::size_t i = c.coeffs().size(); i-- > 0;)
            acc = acc * r + c.coeffs()[i].convert_to<double>();
        REQUIRE(std::abs(acc) < 1e-9);
    }
}

TEST_CASE("is_irreducible, worked examples") {
    SECTION("x^4 + 1 needs the factor search") {
        auto r = galid::is_irreducible(IntPoly{1, 0, 0, 0, 1});
        REQUIRE(r.irreducible());
        REQUIRE(r.kind == galid::IrreducibilityResult::Kind::irreducible_by_search);
        REQUIRE_FALSE(r.certificate_prime.has_value());
    }
    SECTION("x^3 - 2 has a mod-p certificate") {
        auto r = galid::is_irreducible(IntPoly{-2, 0, 0, 1});
        REQUIRE(r.irreducible());
        REQUIRE(r.kind == galid::IrreducibilityResult::Kind::irreducible_certified);
        REQUIRE(r.certificate_prime.has_value());
        // the first usable prime with type {3} is 7
        REQUIRE(*r.certificate_prime == 7);
    }
    SECTION("x^4 - 1 is reducible with witness x - 1") {
        auto r = galid::is_irreducible(IntPoly{-1, 0, 0, 0, 1});
        REQUIRE_FALSE(r.irreducible());
        REQUIRE(r.witness_factor.has_value());
        REQUIRE(*r.witness_factor == IntPoly{-1, 1});
    }
    SECTION("degree > 5 unsupported") {
        REQUIRE_THROWS_AS(galid::is_irreducible(IntPoly{1, 0, 0, 0, 0, 0, 1}),
                          std::invalid_argument);
    }
    SECTION("non-monic rejected") {
        REQUIRE_THROWS_AS(galid::is_irreducible(IntPoly{1, 0, 2}), std::invalid_argument);
    }
}

TEST_CASE("is_irreducible agrees with plain box search, exhaustively") {
    // all monic polynomials of degree 2..4 with coefficients in [-3, 3]
    for (int deg = 2; deg <= 4; ++deg) {
        long total = 1;
        for (int i = 0; i < deg; ++i) total *= 7;
        for (long code = 0; code < total; ++code) {
            std::vector<long long> c64(static_cast<std::size_t>(deg) + 1, 0);
            long v = code;
            long long maxabs = 0;
            for (int i = 0; i < deg; ++i) {
                c64[static_cast<std::size_t>(i)] = v % 7 - 3;
                maxabs = std::max(maxabs, std::abs(c64[static_cast<std::size_t>(i)]));
                v /= 7;
            }
            c64.back() = 1;
            std::vector<BigInt> cb(c64.begin(), c64.end());
            IntPoly c(std::move(cb));
            const long long bound = (1LL << deg) * (1 + maxabs);
            const bool brute_irreducible = !oracles::brute_reducible_i64(c64, bound);
            const auto got = galid::is_irreducible(c);
            if (got.irreducible() != brute_irreducible) {
                CAPTURE(deg, c64);
                REQUIRE(got.irreducible() == brute_irreducible);
            }
            if (!got.irreducible()) {
                // the returned witness must really divide c
                REQUIRE(c.divide_exact_monic(*got.witness_factor).has_value());
            }
        }
    }
}

TEST_CASE("irreducible implies nonzero discriminant") {
    const std::vector<IntPoly> fixtures = {IntPoly{-2, 0, 0, 1}, IntPoly{1, 0, 0, 0, 1},
                                           IntPoly{-1, -1, 0, 0, 0, 1}, IntPoly{-1, -3, 0, 1}};
    for (const IntPoly& c : fixtures) {
        REQUIRE(galid::is_irreducible(c).irreducible());
        REQUIRE(galid::discriminant(c) != 0);
    }
}
