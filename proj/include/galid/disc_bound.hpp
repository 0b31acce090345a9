#ifndef GALID_DISC_BOUND_HPP
#define GALID_DISC_BOUND_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "galid/int_poly.hpp"
#include "galid/numeric.hpp"

namespace galid {

namespace detail {

/// Dyadic upper bound for log2(b), b >= 1, with `frac_bits` fractional bits.
/// All roundings go upward and the final 2^-frac_bits truncation allowance is
/// added back, so the result is certified >= log2(b) and within ~2^-62 of it.
inline BigRat log2_upper(const BigInt& b, unsigned frac_bits = 64) {
    if (b < 1) throw std::invalid_argument("log2_upper: argument must be >= 1");
    if (b == 1) return BigRat(0);
    const unsigned msb = boost::multiprecision::msb(b); // floor(log2 b)
    const unsigned P = frac_bits + 32;

    // X/2^P >= b/2^msb, in [1, 2), rounded up
    BigInt X = ((b << P) + ((BigInt(1) << msb) - 1)) >> msb;
    BigInt frac_num = 0; // fractional bits accumulated, denominator 2^frac_bits
    const BigInt two_pow_p1 = BigInt(1) << (P + 1);
    for (unsigned i = 0; i < frac_bits; ++i) {
        X = (X * X + (BigInt(1) << P) - 1) >> P; // ceil(X^2 / 2^P)
        frac_num <<= 1;
        if (X >= two_pow_p1) {
            frac_num += 1;
            X = (X + 1) >> 1;
        }
    }
    frac_num += 1; // absorb the truncation of the remaining bits
    return BigRat(msb) + BigRat(frac_num, BigInt(1) << frac_bits);
}

} // namespace detail

/// The certified bound chain from the coefficients of c to an upper bound on
/// the splitting-field discriminant and (optionally) on the prime search.
///
/// All identities hold exactly: beta_bound = root_bound (1 + (n-1) z_bound)
/// and the discriminant bound is (2 ceil(beta_bound))^(m(m-1)) with m = n!.
/// The expanded integer is kept up to 10^6 bits; the base/exponent pair and
/// a dyadic upper bound on the base-2 logarithm are always present.
struct BoundReport {
    int degree = 0;
    BigRat root_bound;                     // every root of c has modulus <= this
    BigRat z_bound;                        // (n!)^2 / 2, bound on the primitive-element multipliers
    BigRat beta_bound;                     // bound on every conjugate of beta
    std::uint64_t h_degree_bound = 0;      // m = n!, bound on deg h = [L:Q]
    BigInt disc_bound_base;                // 2 ceil(beta_bound)
    std::uint64_t disc_bound_exponent = 0; // m(m-1)
    std::optional<BigInt> disc_bound;      // base^exponent when <= 10^6 bits
    BigRat disc_bound_log2;                // certified upper bound on log2(base^exponent)
    std::optional<BigRat> lmo_exponent;    // the LMO constant A, when supplied
    std::optional<BigRat> prime_bound_log2; // 1 + A log2(disc_bound), when A supplied
};

inline BoundReport compute_bound_chain(const IntPoly& c,
                                       std::optional<BigRat> lmo_exponent = std::nullopt) {
    const int n = c.degree();
    if (n < 2)
        throw std::invalid_argument("compute_bound_chain: degree must be >= 2");
    if (!c.is_monic())
        throw std::invalid_argument("compute_bound_chain: polynomial must be monic");
    if (lmo_exponent && *lmo_exponent <= 0)
        throw std::invalid_argument("compute_bound_chain: the exponent A must be positive");

    BoundReport rep;
    rep.degree = n;
    rep.root_bound = cauchy_root_bound(c);

    BigInt factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    rep.z_bound = BigRat(factorial * factorial, 2);
    rep.beta_bound = rep.root_bound * (1 + BigRat(n - 1) * rep.z_bound);
    rep.h_degree_bound = static_cast<std::uint64_t>(factorial);

    // 2 * ceil(beta_bound)
    {
        BigInt num = numerator(rep.beta_bound), den = denominator(rep.beta_bound);
        BigInt q, r;
        divide_qr(num, den, q, r);
        if (r != 0) q += 1;
        rep.disc_bound_base = 2 * q;
    }
    rep.disc_bound_exponent = rep.h_degree_bound * (rep.h_degree_bound - 1);

    const unsigned base_bits = boost::multiprecision::msb(rep.disc_bound_base) + 1;
    if (static_cast<std::uint64_t>(base_bits) * rep.disc_bound_exponent <= 1000000) {
        rep.disc_bound = boost::multiprecision::pow(
            rep.disc_bound_base, static_cast<unsigned>(rep.disc_bound_exponent));
    }
    rep.disc_bound_log2 =
        BigRat(rep.disc_bound_exponent) * detail::log2_upper(rep.disc_bound_base);

    if (lmo_exponent) {
        rep.lmo_exponent = lmo_exponent;
        rep.prime_bound_log2 = 1 + *lmo_exponent * rep.disc_bound_log2;
    }
    return rep;
}

/// Dense square integer matrix, row-major.
struct IntMatrix {
    std::size_t dim = 0;
    std::vector<BigInt> a;

    explicit IntMatrix(std::size_t d) : dim(d), a(d * d) {}

    BigInt& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

/// Matrix of multiplication by beta = alpha_1 + z_2 alpha_2 + ... + z_n alpha_n
/// on the n^n generators alpha_1^{i_1} ... alpha_n^{i_n}, 0 <= i_j <= n-1,
/// indexed by sum i_j n^{j-1} (so the basis starts 1, alpha_1, ...). Powers
/// alpha_j^n reduce through c. Supported for n <= 4 (dimension 256).
inline IntMatrix build_beta_matrix(const IntPoly& c, const std::vector<BigInt>& z) {
    const int n = c.degree();
    if (n < 2 || n > 4)
        throw std::invalid_argument("build_beta_matrix: degree must be 2..4 (n^n dimension)");
    if (!c.is_monic())
        throw std::invalid_argument("build_beta_matrix: polynomial must be monic");
    if (static_cast<int>(z.size()) != n - 1)
        throw std::invalid_argument("build_beta_matrix: need n-1 multipliers z_2..z_n");
    BigInt zcap = 1;
    for (int i = 2; i <= n; ++i) zcap *= i;
    zcap = zcap * zcap; // (n!)^2; the strict bound is half of it
    for (const BigInt& zi : z)
        if (2 * abs(zi) >= zcap)
            throw std::invalid_argument("build_beta_matrix: |z_i| must be < (n!)^2 / 2");

    std::size_t dim = 1;
    for (int i = 0; i < n; ++i) dim *= static_cast<std::size_t>(n);
    IntMatrix m(dim);

    std::size_t stride = 1; // n^{j-1}
    for (int j = 1; j <= n; ++j, stride *= static_cast<std::size_t>(n)) {
        const BigInt mult = (j == 1) ? BigInt(1) : z[static_cast<std::size_t>(j - 2)];
        if (mult == 0) continue;
        for (std::size_t b = 0; b < dim; ++b) {
            const int i_j = static_cast<int>((b / stride) % static_cast<std::size_t>(n));
            if (i_j + 1 < n) {
                m.at(b, b + stride) += mult;
            } else {
                // alpha_j^n = -a_{n-1} alpha_j^{n-1} - ... - a_0
                const std::size_t base = b - static_cast<std::size_t>(i_j) * stride;
                for (int k = 0; k < n; ++k)
                    m.at(b, base + static_cast<std::size_t>(k) * stride) -=
                        mult * c.coeff(static_cast<std::size_t>(k));
            }
        }
    }
    return m;
}

/// Exact characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
/// recurrence (all divisions exact). Monic of degree dim; dim <= 256.
inline IntPoly charpoly(const IntMatrix& m) {
    const std::size_t d = m.dim;
    if (d == 0 || d > 256)
        throw std::invalid_argument("charpoly: dimension must be 1..256");

    std::vector<BigInt> coeffs(d + 1);
    coeffs[d] = 1;

    IntMatrix a = m;
    for (std::size_t k = 1; k <= d; ++k) {
        BigInt tr = 0;
        for (std::size_t i = 0; i < d; ++i) tr += a.at(i, i);
        BigInt ck, rem;
        divide_qr(tr, BigInt(k), ck, rem);
        if (rem != 0) throw std::logic_error("charpoly: inexact trace division");
        ck = -ck;
        coeffs[d - k] = ck;
        if (k == d) break;

        // a <- m (a + ck I)
        for (std::size_t i = 0; i < d; ++i) a.at(i, i) += ck;
        IntMatrix next(d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t l = 0; l < d; ++l) {
                const BigInt& mil = m.at(i, l);
                if (mil == 0) continue;
                for (std::size_t j = 0; j < d; ++j) {
                    if (a.at(l, j) == 0) continue;
                    next.at(i, j) += mil * a.at(l, j);
                }
            }
        }
        a = std::move(next);
    }
    return IntPoly(std::move(coeffs));
}

/// Residual |k(beta)| / scale for beta = alpha_1 + sum z_i alpha_i formed
/// from the numeric roots of c, where scale respects the magnitude of the
/// evaluation. Small residual certifies (numerically) that beta is a root.
inline double beta_root_residual(const IntPoly& c, const std::vector<BigInt>& z,
                                 const IntPoly& k) {
    if (static_cast<int>(z.size()) != c.degree() - 1)
        throw std::invalid_argument("beta_root_residual: need n-1 multipliers");
    const auto roots = numeric_roots(c);
    std::complex<long double> beta(static_cast<long double>(roots[0].real()),
                                   static_cast<long double>(roots[0].imag()));
    for (std::size_t i = 1; i < roots.size(); ++i) {
        const long double zi = z[i - 1].convert_to<long double>();
        beta += zi * std::complex<long double>(static_cast<long double>(roots[i].real()),
                                               static_cast<long double>(roots[i].imag()));
    }
    std::complex<long double> acc = 0;
    long double scale = 0;
    const long double abeta = std::abs(beta);
    long double power = 1;
    for (std::size_t i = 0; i < k.coeffs().size(); ++i) {
        const long double ki = k.coeffs()[i].convert_to<long double>();
        scale += std::abs(ki) * power;
        power *= std::max<long double>(abeta, 1);
    }
    for (std::size_t i = k.coeffs().size(); i-- > 0;)
        acc = acc * beta + k.coeffs()[i].convert_to<long double>();
    if (scale < 1) scale = 1;
    return static_cast<double>(std::abs(acc) / scale);
}

/// Numerical cross-check that beta is a root of k, at the given relative
/// tolerance.
inline bool verify_beta_root(const IntPoly& c, const std::vector<BigInt>& z, const IntPoly& k,
                             double tolerance = 1e-6) {
    return beta_root_residual(c, z, k) < tolerance;
}

} // namespace galid

#endif // GALID_DISC_BOUND_HPP
