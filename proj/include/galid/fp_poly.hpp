#ifndef GALID_FP_POLY_HPP
#define GALID_FP_POLY_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "galid/factor_type.hpp"
#include "galid/primes.hpp"

namespace galid {

/// Polynomial over the prime field F_p.
///
/// Coefficients are residues in [0, p) stored ascending by degree with no
/// trailing zeros; the zero polynomial is the empty sequence. The modulus is
/// validated as prime once at public construction; results of arithmetic
/// inherit the already-validated modulus.
class ModPoly {
public:
    using u64 = std::uint64_t;

    ModPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
        check_modulus(p_);
        for (u64& x : c_) x %= p_;
        trim();
    }

    static ModPoly zero(u64 p) { return ModPoly(p, {}); }
    static ModPoly one(u64 p) { return ModPoly(p, {1}); }

    /// x as an element of F_p[x].
    static ModPoly x(u64 p) { return ModPoly(p, {0, 1}); }

    u64 modulus() const noexcept { return p_; }
    const std::vector<u64>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    u64 coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    u64 leading() const {
        if (c_.empty()) throw std::domain_error("ModPoly::leading: zero polynomial");
        return c_.back();
    }

    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    bool operator==(const ModPoly& g) const noexcept {
        return p_ == g.p_ && c_ == g.c_;
    }

    ModPoly operator+(const ModPoly& g) const {
        require_same_modulus(g);
        std::vector<u64> r(std::max(c_.size(), g.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            u64 s = coeff(i) + g.coeff(i);
            if (s >= p_) s -= p_;
            r[i] = s;
        }
        return unchecked(p_, std::move(r));
    }

    ModPoly operator-(const ModPoly& g) const {
        require_same_modulus(g);
        std::vector<u64> r(std::max(c_.size(), g.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            u64 a = coeff(i), b = g.coeff(i);
            r[i] = a >= b ? a - b : a + p_ - b;
        }
        return unchecked(p_, std::move(r));
    }

    ModPoly operator*(const ModPoly& g) const {
        require_same_modulus(g);
        if (is_zero() || g.is_zero()) return zero_unchecked(p_);
        std::vector<u64> r(c_.size() + g.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j) {
                if (g.c_[j] == 0) continue;
                r[i + j] = (r[i + j] + detail::mulmod_u64(c_[i], g.c_[j], p_)) % p_;
            }
        }
        return unchecked(p_, std::move(r));
    }

    ModPoly scaled(u64 k) const {
        k %= p_;
        std::vector<u64> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i] = detail::mulmod_u64(c_[i], k, p_);
        return unchecked(p_, std::move(r));
    }

    ModPoly monic() const {
        if (is_zero()) return *this;
        if (c_.back() == 1) return *this;
        return scaled(inv_mod(c_.back()));
    }

    ModPoly derivative() const {
        if (c_.size() <= 1) return zero_unchecked(p_);
        std::vector<u64> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = detail::mulmod_u64(c_[i], i % p_, p_);
        return unchecked(p_, std::move(r));
    }

    /// Long division: returns (quotient, remainder), divisor nonzero.
    std::pair<ModPoly, ModPoly> divrem(const ModPoly& g) const {
        require_same_modulus(g);
        if (g.is_zero()) throw std::domain_error("ModPoly::divrem: division by zero");
        if (degree() < g.degree()) return {zero_unchecked(p_), *this};
        const u64 inv_lead = inv_mod(g.c_.back());
        std::vector<u64> r = c_;
        std::vector<u64> q(c_.size() - g.c_.size() + 1, 0);
        for (std::size_t k = q.size(); k-- > 0;) {
            u64 lead = r[k + g.c_.size() - 1];
            if (lead == 0) continue;
            u64 f = detail::mulmod_u64(lead, inv_lead, p_);
            q[k] = f;
            for (std::size_t i = 0; i < g.c_.size(); ++i) {
                u64 sub = detail::mulmod_u64(f, g.c_[i], p_);
                u64& dst = r[k + i];
                dst = dst >= sub ? dst - sub : dst + p_ - sub;
            }
        }
        return {unchecked(p_, std::move(q)), unchecked(p_, std::move(r))};
    }

    ModPoly rem(const ModPoly& g) const { return divrem(g).second; }

    u64 eval(u64 x0) const {
        x0 %= p_;
        u64 acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = (detail::mulmod_u64(acc, x0, p_) + c_[i]) % p_;
        return acc;
    }

private:
    struct unchecked_tag {};
    ModPoly(unchecked_tag, u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) { trim(); }

    static ModPoly unchecked(u64 p, std::vector<u64> coeffs) {
        return ModPoly(unchecked_tag{}, p, std::move(coeffs));
    }
    static ModPoly zero_unchecked(u64 p) { return ModPoly(unchecked_tag{}, p, {}); }

    static void check_modulus(u64 p) {
        static thread_local u64 last_validated = 0;
        if (p == last_validated) return;
        if (!is_prime_u64(p))
            throw std::invalid_argument("ModPoly: modulus must be prime");
        last_validated = p;
    }

    void require_same_modulus(const ModPoly& g) const {
        if (p_ != g.p_)
            throw std::invalid_argument("ModPoly: modulus mismatch");
    }

    u64 inv_mod(u64 a) const { return detail::powmod_u64(a, p_ - 2, p_); }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    u64 p_;
    std::vector<u64> c_;
};

inline std::ostream& operator<<(std::ostream& os, const ModPoly& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        std::uint64_t ci = f.coeffs()[i];
        if (ci == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || ci != 1) os << ci;
        if (i >= 1) {
            if (ci != 1) os << "*";
            os << "x";
        }
        if (i >= 2) os << "^" << i;
    }
    return os << " (mod " << f.modulus() << ")";
}

/// Monic gcd; gcd(a, 0) is the monic normalization of a.
inline ModPoly gcd_mod(ModPoly a, ModPoly b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("gcd_mod: modulus mismatch");
    while (!b.is_zero()) {
        ModPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// base^e mod m in F_p[x], by square and multiply.
inline ModPoly powmod_poly(const ModPoly& base, std::uint64_t e, const ModPoly& m) {
    ModPoly r = ModPoly::one(base.modulus()).rem(m);
    ModPoly b = base.rem(m);
    while (e) {
        if (e & 1) r = (r * b).rem(m);
        e >>= 1;
        if (e) b = (b * b).rem(m);
    }
    return r;
}

/// True iff c is squarefree over F_p, i.e. gcd(c, c') = 1.
inline bool is_squarefree_mod(const ModPoly& c) {
    if (c.is_zero()) throw std::domain_error("is_squarefree_mod: zero polynomial");
    ModPoly d = c.derivative();
    if (d.is_zero()) return c.degree() == 0;
    return gcd_mod(c, d).degree() == 0;
}

/// Multiset of degrees of the irreducible factors of a monic squarefree c
/// over F_p, by distinct-degree factorization: for d = 1, 2, ... the gcd of
/// the remaining cofactor with x^{p^d} - x collects the product of all its
/// irreducible factors of degree exactly d.
inline FactorType distinct_degree_type(const ModPoly& c) {
    if (!c.is_monic())
        throw std::invalid_argument("distinct_degree_type: polynomial must be monic");
    if (!is_squarefree_mod(c))
        throw std::domain_error("distinct_degree_type: polynomial is not squarefree mod p");

    const std::uint64_t p = c.modulus();
    FactorType type;
    ModPoly rest = c;
    ModPoly h = ModPoly::x(p).rem(rest); // x^{p^d} mod rest, built up incrementally
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = powmod_poly(h, p, rest);
        ModPoly g = gcd_mod(rest, h - ModPoly::x(p).rem(rest));
        if (g.degree() > 0) {
            for (int i = 0; i < g.degree() / d; ++i) type.add(d);
            rest = rest.divrem(g).first;
            h = h.rem(rest);
        }
    }
    if (rest.degree() > 0) type.add(rest.degree());
    return type;
}

} // namespace galid

#endif // GALID_FP_POLY_HPP
