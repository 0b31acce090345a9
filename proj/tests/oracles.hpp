// Test-side oracles, kept deliberately independent of the library's
// implementation paths: a dumb trial-division factorizer over F_p, a plain
// box-search factor finder over Z, closed-form discriminants through exact
// depression, and the conjugate-product construction of a primitive-element
// minimal polynomial from numeric roots.

#ifndef GALID_TESTS_ORACLES_HPP
#define GALID_TESTS_ORACLES_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <galid/factor_type.hpp>
#include <galid/int_poly.hpp>

namespace oracles {

using galid::BigInt;
using galid::BigRat;
using galid::FactorType;
using galid::IntPoly;
using u64 = std::uint64_t;

// ---- F_p polynomials as plain coefficient vectors (ascending, trimmed) ----

inline std::vector<u64> trim(std::vector<u64> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

/// Remainder of a by b over F_p (b monic), schoolbook. Fits u64 for p <= 13.
inline std::vector<u64> polymod(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
    while (a.size() >= b.size() && !a.empty()) {
        u64 f = a.back();
        if (f) {
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() < b.size()) break;
    }
    return a;
}

/// Smallest monic divisor of f with degree in [1, deg(f)/1], trying every
/// monic polynomial of each degree in lexicographic coefficient order.
inline std::optional<std::vector<u64>> smallest_monic_divisor(const std::vector<u64>& f, u64 p) {
    const int deg_f = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg_f; ++d) {
        std::vector<u64> g(static_cast<std::size_t>(d) + 1, 0);
        g.back() = 1;
        u64 total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (u64 code = 0; code < total; ++code) {
            u64 c = code;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = c % p;
                c /= p;
            }
            if (trim(polymod(f, g, p)).empty()) return g;
        }
    }
    return std::nullopt;
}

/// Factorization type by repeated smallest-divisor extraction: the smallest
/// divisor is necessarily irreducible. Independent of distinct-degree
/// factorization.
inline FactorType brute_factor_type(std::vector<u64> f, u64 p) {
    FactorType type;
    while (static_cast<int>(f.size()) - 1 > 0) {
        auto g = smallest_monic_divisor(f, p);
        if (!g) {
            type.add(static_cast<int>(f.size()) - 1);
            break;
        }
        type.add(static_cast<int>(g->size()) - 1);
        // divide f by g exactly (g monic)
        std::vector<u64> q(f.size() - g->size() + 1, 0);
        std::vector<u64> r = f;
        for (std::size_t k = q.size(); k-- > 0;) {
            u64 fac = r[k + g->size() - 1];
            q[k] = fac;
            if (!fac) continue;
            for (std::size_t i = 0; i < g->size(); ++i)
                r[k + i] = (r[k + i] + p - fac * (*g)[i] % p) % p;
        }
        f = trim(q);
    }
    return type;
}

// ---- plain box-search reducibility over Z (int64, small inputs only) ----

inline bool divides_monic_i64(const std::vector<long long>& c, const std::vector<long long>& g) {
    std::vector<long long> r = c;
    if (r.size() < g.size()) return false;
    for (std::size_t k = r.size() - g.size() + 1; k-- > 0;) {
        long long f = r[k + g.size() - 1];
        if (f == 0) continue;
        for (std::size_t i = 0; i < g.size(); ++i) r[k + i] -= f * g[i];
    }
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
        if (r[i] != 0) return false;
    return true;
}

/// True iff monic c (degree <= 4, small coefficients) has a monic factor of
/// degree <= deg/2 inside the box |coef| <= bound. Pure enumeration.
inline bool brute_reducible_i64(const std::vector<long long>& c, long long bound) {
    const int n = static_cast<int>(c.size()) - 1;
    for (long long b0 = -bound; b0 <= bound; ++b0) {
        if (divides_monic_i64(c, {b0, 1})) return true;
    }
    if (n >= 4) {
        for (long long b0 = -bound; b0 <= bound; ++b0)
            for (long long b1 = -bound; b1 <= bound; ++b1)
                if (divides_monic_i64(c, {b0, b1, 1})) return true;
    }
    return false;
}

// ---- closed-form discriminants through exact depression ----

/// Substitute x -> x + t exactly over the rationals: sum c_k (x + t)^k.
inline std::vector<BigRat> shift_poly(const IntPoly& c, const BigRat& t) {
    std::vector<BigRat> out(c.coeffs().size(), BigRat(0));
    std::vector<BigRat> power{BigRat(1)}; // coefficients of (x + t)^k
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
        for (std::size_t j = 0; j < power.size(); ++j)
            out[j] += BigRat(c.coeffs()[k]) * power[j];
        std::vector<BigRat> next(power.size() + 1, BigRat(0));
        for (std::size_t j = 0; j < power.size(); ++j) {
            next[j] += power[j] * t;
            next[j + 1] += power[j];
        }
        power = std::move(next);
    }
    return out;
}

/// Discriminant of a monic cubic via depression to x^3 + px + q and the
/// closed form -4p^3 - 27q^2. Translation leaves the discriminant unchanged.
inline BigRat cubic_disc_closed_form(const IntPoly& c) {
    const BigRat a2(c.coeff(2));
    const auto d = shift_poly(c, -a2 / 3);
    const BigRat p = d[1], q = d[0];
    return BigRat(-4) * p * p * p - BigRat(27) * q * q;
}

/// Discriminant of a monic quartic via depression to x^4 + px^2 + qx + r:
/// 16 p^4 r - 4 p^3 q^2 - 128 p^2 r^2 + 144 p q^2 r - 27 q^4 + 256 r^3.
inline BigRat quartic_disc_closed_form(const IntPoly& c) {
    const BigRat a3(c.coeff(3));
    const auto d = shift_poly(c, -a3 / 4);
    const BigRat p = d[2], q = d[1], r = d[0];
    return BigRat(16) * p * p * p * p * r - BigRat(4) * p * p * p * q * q -
           BigRat(128) * p * p * r * r + BigRat(144) * p * q * q * r - BigRat(27) * q * q * q * q +
           BigRat(256) * r * r * r;
}

// ---- conjugate-product construction of h = min poly of beta ----

struct HOracle {
    IntPoly h;              // rounded integer polynomial
    double max_round_error; // largest |coefficient - rounded|
    double eval_residual;   // relative |h(beta)| at the numeric beta
};

/// Given the numeric roots of c and a list of Galois permutations (as images
/// on root indices), forms beta_sigma = sum_i z_i * root[sigma(i)] for every
/// sigma, expands prod (x - beta_sigma), and rounds to integers.
inline HOracle conjugate_product_h(const std::vector<std::complex<double>>& roots,
                                   const std::vector<std::vector<int>>& sigmas,
                                   const std::vector<long long>& z /* z_1 = 1 included */) {
    std::vector<std::complex<double>> betas;
    for (const auto& sigma : sigmas) {
        std::complex<double> b = 0;
        for (std::size_t i = 0; i < z.size(); ++i)
            b += static_cast<double>(z[i]) * roots[static_cast<std::size_t>(sigma[i])];
        betas.push_back(b);
    }
    std::vector<std::complex<double>> coeff{1.0};
    for (const auto& b : betas) {
        std::vector<std::complex<double>> next(coeff.size() + 1, 0.0);
        for (std::size_t j = 0; j < coeff.size(); ++j) {
            next[j + 1] += coeff[j];
            next[j] -= coeff[j] * b;
        }
        coeff = std::move(next);
    }
    std::reverse(coeff.begin(), coeff.end()); // ascending

    HOracle out;
    out.max_round_error = 0;
    std::vector<BigInt> rounded(coeff.size());
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        const double re = coeff[i].real();
        const double r = std::round(re);
        out.max_round_error =
            std::max(out.max_round_error, std::max(std::abs(re - r), std::abs(coeff[i].imag())));
        rounded[i] = BigInt(static_cast<long long>(r));
    }
    out.h = IntPoly(std::move(rounded));

    // validate by evaluating the exact h at the first numeric beta
    std::complex<double> acc = 0;
    double scale = 0, pw = 1;
    const double ab = std::max(1.0, std::abs(betas[0]));
    for (std::size_t i = 0; i < out.h.coeffs().size(); ++i) {
        scale += std::abs(out.h.coeffs()[i].convert_to<double>()) * pw;
        pw *= ab;
    }
    for (std::size_t i = out.h.coeffs().size(); i-- > 0;)
        acc = acc * betas[0] + out.h.coeffs()[i].convert_to<double>();
    out.eval_residual = std::abs(acc) / std::max(1.0, scale);
    return out;
}

} // namespace oracles

#endif // GALID_TESTS_ORACLES_HPP
