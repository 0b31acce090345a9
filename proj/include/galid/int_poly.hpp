#ifndef GALID_INT_POLY_HPP
#define GALID_INT_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "galid/factor_type.hpp"
#include "galid/fp_poly.hpp"
#include "galid/primes.hpp"

namespace galid {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// ascending by degree, normalized (no trailing zeros; zero polynomial is
/// the empty sequence).
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPoly(std::initializer_list<long long> coeffs) {
        c_.reserve(coeffs.size());
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }

    /// Convenience: from descending coefficient order (as read or printed).
    static IntPoly from_descending(std::vector<BigInt> coeffs) {
        std::reverse(coeffs.begin(), coeffs.end());
        return IntPoly(std::move(coeffs));
    }

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(std::size_t i) const {
        static const BigInt kZero = 0;
        return i < c_.size() ? c_[i] : kZero;
    }

    const BigInt& leading() const {
        if (c_.empty()) throw std::domain_error("IntPoly::leading: zero polynomial");
        return c_.back();
    }

    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    bool operator==(const IntPoly& g) const noexcept { return c_ == g.c_; }

    IntPoly operator+(const IntPoly& g) const {
        std::vector<BigInt> r(std::max(c_.size(), g.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + g.coeff(i);
        return IntPoly(std::move(r));
    }

    IntPoly operator-(const IntPoly& g) const {
        std::vector<BigInt> r(std::max(c_.size(), g.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - g.coeff(i);
        return IntPoly(std::move(r));
    }

    IntPoly operator*(const IntPoly& g) const {
        if (is_zero() || g.is_zero()) return {};
        std::vector<BigInt> r(c_.size() + g.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j)
                r[i + j] += c_[i] * g.c_[j];
        }
        return IntPoly(std::move(r));
    }

    IntPoly operator-() const {
        std::vector<BigInt> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return IntPoly(std::move(r));
    }

    IntPoly scaled(const BigInt& k) const {
        if (k == 0) return {};
        std::vector<BigInt> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
        return IntPoly(std::move(r));
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    BigRat eval(const BigRat& x) const {
        BigRat acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + BigRat(c_[i]);
        return acc;
    }

    /// Exact division by a monic divisor; nullopt if the division leaves a
    /// remainder.
    std::optional<IntPoly> divide_exact_monic(const IntPoly& g) const {
        if (!g.is_monic())
            throw std::invalid_argument("IntPoly::divide_exact_monic: divisor must be monic");
        if (is_zero()) return IntPoly{};
        if (degree() < g.degree()) return std::nullopt;
        std::vector<BigInt> r = c_;
        std::vector<BigInt> q(c_.size() - g.c_.size() + 1);
        for (std::size_t k = q.size(); k-- > 0;) {
            BigInt f = r[k + g.c_.size() - 1];
            q[k] = f;
            if (f == 0) continue;
            for (std::size_t i = 0; i < g.c_.size(); ++i) r[k + i] -= f * g.c_[i];
        }
        for (const BigInt& rest : r)
            if (rest != 0) return std::nullopt;
        return IntPoly(std::move(q));
    }

    BigInt max_abs_coeff() const {
        BigInt m = 0;
        for (const BigInt& x : c_)
            if (abs(x) > m) m = abs(x);
        return m;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

inline IntPoly derivative(const IntPoly& c) {
    if (c.degree() < 1) return {};
    std::vector<BigInt> r(static_cast<std::size_t>(c.degree()));
    for (std::size_t i = 1; i < c.coeffs().size(); ++i)
        r[i - 1] = c.coeffs()[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

namespace detail {

/// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B, exact over Z.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const BigInt lb = b.leading();
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly shift_mul;
        {
            std::vector<BigInt> s(static_cast<std::size_t>(r.degree() - b.degree()) + 1);
            s.back() = r.leading();
            shift_mul = IntPoly(std::move(s)) * b;
        }
        r = r.scaled(lb) - shift_mul;
        --e;
    }
    BigInt f = 1;
    for (; e > 0; --e) f *= lb;
    return r.scaled(f);
}

inline IntPoly divide_by_const(const IntPoly& a, const BigInt& d) {
    std::vector<BigInt> r(a.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        BigInt q, rem;
        divide_qr(a.coeffs()[i], d, q, rem);
        if (rem != 0) throw std::logic_error("subresultant: inexact division");
        r[i] = q;
    }
    return IntPoly(std::move(r));
}

} // namespace detail

/// Resultant of two integer polynomials via the fraction-free subresultant
/// remainder sequence.
inline BigInt resultant(IntPoly a, IntPoly b) {
    if (a.is_zero() || b.is_zero()) return 0;
    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        BigInt r = 1;
        for (int i = 0; i < a.degree(); ++i) r *= b.leading();
        return sign * r;
    }
    BigInt g = 1, h = 1;
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        IntPoly r = detail::pseudo_rem(a, b);
        a = std::move(b);
        {
            BigInt denom = g;
            for (int i = 0; i < delta; ++i) denom *= h;
            b = r.is_zero() ? IntPoly{} : detail::divide_by_const(r, denom);
        }
        g = a.leading();
        if (delta > 0) {
            // h = g^delta / h^(delta-1), exact
            BigInt num = 1;
            for (int i = 0; i < delta; ++i) num *= g;
            BigInt den = 1;
            for (int i = 0; i < delta - 1; ++i) den *= h;
            BigInt q, rem;
            divide_qr(num, den, q, rem);
            if (rem != 0) throw std::logic_error("subresultant: inexact h update");
            h = q;
        }
        if (b.is_zero()) return 0;
        if (b.degree() == 0) {
            // res = lc(b)^(deg a) / h^(deg a - 1), exact
            BigInt num = 1;
            for (int i = 0; i < a.degree(); ++i) num *= b.leading();
            BigInt den = 1;
            for (int i = 0; i < a.degree() - 1; ++i) den *= h;
            BigInt q, rem;
            divide_qr(num, den, q, rem);
            if (rem != 0) throw std::logic_error("subresultant: inexact final division");
            return sign * q;
        }
    }
}

/// disc(c) = (-1)^{n(n-1)/2} Res(c, c') / lc(c).
inline BigInt discriminant(const IntPoly& c) {
    const int n = c.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    if (n == 1) return 1;
    BigInt res = resultant(c, derivative(c));
    BigInt q, rem;
    divide_qr(res, c.leading(), q, rem);
    if (rem != 0) throw std::logic_error("discriminant: resultant not divisible by lc");
    if (((n * (n - 1)) / 2) & 1) q = -q;
    return q;
}

/// Cauchy bound for a monic polynomial: every complex root has modulus
/// <= 1 + max |c_i| over the non-leading coefficients.
inline BigRat cauchy_root_bound(const IntPoly& c) {
    if (!c.is_monic()) throw std::invalid_argument("cauchy_root_bound: polynomial must be monic");
    BigInt m = 0;
    for (int i = 0; i < c.degree(); ++i)
        if (abs(c.coeff(i)) > m) m = abs(c.coeff(i));
    return BigRat(1 + m);
}

inline IntPoly reduce_mod_p_to_int(const IntPoly&) = delete;

/// Reduction of an integer polynomial mod a prime p into F_p[x].
inline ModPoly reduce_mod_p(const IntPoly& c, std::uint64_t p) {
    std::vector<std::uint64_t> r(c.coeffs().size());
    const BigInt bp = p;
    for (std::size_t i = 0; i < r.size(); ++i) {
        BigInt v = c.coeffs()[i] % bp;
        if (v < 0) v += bp;
        r[i] = static_cast<std::uint64_t>(v);
    }
    return ModPoly(p, std::move(r));
}

/// Outcome of the degree <= 5 irreducibility decision.
struct IrreducibilityResult {
    enum class Kind {
        irreducible_certified,  ///< witnessed by an irreducible reduction mod p
        irreducible_by_search,  ///< bounded factor search exhausted with no hit
        reducible,              ///< a monic integer factor was found
    };

    Kind kind{Kind::irreducible_by_search};
    std::optional<IntPoly> witness_factor;       // set when reducible
    std::optional<std::uint64_t> certificate_prime;  // set when certified

    bool irreducible() const noexcept { return kind != Kind::reducible; }
};

namespace detail {

/// Searches for a monic integer factor of degree d with coefficients bounded
/// by `bound`. Candidates are screened by the divisibility of their values at
/// 0, 1, -1 against the corresponding values of c before attempting the full
/// division.
inline std::optional<IntPoly> find_monic_factor(const IntPoly& c, int d, const BigInt& bound) {
    const BigInt c0 = c.eval(BigInt(0));
    const BigInt c1 = c.eval(BigInt(1));
    const BigInt cm1 = c.eval(BigInt(-1));
    // c(0) == 0 is handled by the caller (x divides c); c(±1) == 0 gives
    // x ∓ 1 as a degree-1 witness first, so in the d >= 2 search all three
    // screen values are nonzero.
    if (d == 1) {
        // x + b0 divides c iff -b0 is a root iff b0 | c(0) and the division is exact.
        for (BigInt b0 = -bound; b0 <= bound; ++b0) {
            if (b0 == 0) continue;
            if (c0 % b0 != 0) continue;
            IntPoly g(std::vector<BigInt>{b0, 1});
            if (c.divide_exact_monic(g)) return g;
        }
        return std::nullopt;
    }
    if (d == 2) {
        for (BigInt b0 = -bound; b0 <= bound; ++b0) {
            if (b0 == 0 || c0 % b0 != 0) continue;
            for (BigInt b1 = -bound; b1 <= bound; ++b1) {
                const BigInt g1 = 1 + b1 + b0;
                if (g1 == 0 || c1 % g1 != 0) continue;
                const BigInt gm1 = 1 - b1 + b0;
                if (gm1 == 0 || cm1 % gm1 != 0) continue;
                IntPoly g(std::vector<BigInt>{b0, b1, 1});
                if (c.divide_exact_monic(g)) return g;
            }
        }
        return std::nullopt;
    }
    throw std::logic_error("find_monic_factor: only degrees 1 and 2 are needed below degree 6");
}

} // namespace detail

/// Irreducibility over Q for monic c of degree <= 5. First looks for a prime
/// p not dividing disc(c) where the reduction is irreducible (a sufficient
/// certificate, tried for `prime_budget` usable primes); otherwise falls back
/// to an exhaustive search for a monic factor of degree <= n/2 with
/// coefficients bounded by 2^n (1 + max |c_i|).
inline IrreducibilityResult is_irreducible(const IntPoly& c, int prime_budget = 40) {
    const int n = c.degree();
    if (!c.is_monic()) throw std::invalid_argument("is_irreducible: polynomial must be monic");
    if (n < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
    if (n > 5) throw std::invalid_argument("is_irreducible: unsupported degree > 5");

    IrreducibilityResult out;
    if (n == 1) {
        out.kind = IrreducibilityResult::Kind::irreducible_by_search;
        return out;
    }

    const BigInt disc = discriminant(c);
    if (disc != 0) {
        int tried = 0;
        std::uint64_t found = 0;
        for_each_prime(1u << 16, [&](std::uint64_t p) {
            if (disc % BigInt(p) == 0) return true;
            FactorType t = distinct_degree_type(reduce_mod_p(c, p));
            ++tried;
            if (t.parts().size() == 1 && t.parts()[0] == n) {
                found = p;
                return false;
            }
            return tried < prime_budget;
        });
        if (found) {
            out.kind = IrreducibilityResult::Kind::irreducible_certified;
            out.certificate_prime = found;
            return out;
        }
    }

    // Bounded factor search, degrees 1..floor(n/2).
    BigInt bound = 1 + c.max_abs_coeff();
    bound <<= n;
    for (int d = 1; d <= n / 2; ++d) {
        if (d == 1 && c.eval(BigInt(0)) == 0) {
            out.kind = IrreducibilityResult::Kind::reducible;
            out.witness_factor = IntPoly({0, 1});
            return out;
        }
        if (auto g = detail::find_monic_factor(c, d, bound)) {
            out.kind = IrreducibilityResult::Kind::reducible;
            out.witness_factor = std::move(*g);
            return out;
        }
    }
    out.kind = IrreducibilityResult::Kind::irreducible_by_search;
    return out;
}

} // namespace galid

#endif // GALID_INT_POLY_HPP
