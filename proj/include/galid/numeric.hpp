#ifndef GALID_NUMERIC_HPP
#define GALID_NUMERIC_HPP

#include <complex>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "galid/int_poly.hpp"

namespace galid {

/// All complex roots of a monic integer polynomial, by Durand-Kerner
/// iteration in double precision. Adequate for the small degrees and
/// moderate coefficients this library works with.
inline std::vector<std::complex<double>> numeric_roots(const IntPoly& c) {
    const int n = c.degree();
    if (n < 1) throw std::invalid_argument("numeric_roots: degree must be >= 1");
    if (!c.is_monic()) throw std::invalid_argument("numeric_roots: polynomial must be monic");

    std::vector<std::complex<double>> a(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = static_cast<double>(c.coeffs()[i]);

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
        return acc;
    };

    // Standard deterministic start: powers of a non-real point inside the
    // root bound circle.
    const double bound = static_cast<double>(BigRat(cauchy_root_bound(c)));
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = 1.0;
    for (int i = 0; i < n; ++i) {
        w *= seed;
        z[static_cast<std::size_t>(i)] = w * bound;
    }

    for (int iter = 0; iter < 500; ++iter) {
        double delta = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            std::complex<double> step = eval(z[static_cast<std::size_t>(i)]) / denom;
            z[static_cast<std::size_t>(i)] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-14 * std::max(1.0, bound)) break;
    }
    return z;
}

} // namespace galid

#endif // GALID_NUMERIC_HPP
