#ifndef GALID_PRIMES_HPP
#define GALID_PRIMES_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace galid {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

/// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is known to be exact below 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// All primes <= limit, ascending (simple sieve; used for base primes).
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            out.push_back(i);
            for (std::uint64_t j = i * i; j <= limit; j += i)
                composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return out;
}

/// Calls fn(p) for each prime p <= limit in ascending order using a segmented
/// sieve. fn returns false to stop early. Returns true if the sweep ran to
/// completion.
inline bool for_each_prime(std::uint64_t limit,
                           const std::function<bool(std::uint64_t)>& fn) {
    if (limit < 2) return true;
    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= limit) ++root;
    const std::vector<std::uint64_t> base = primes_up_to(root);

    constexpr std::uint64_t kSegment = 1u << 16;
    std::vector<bool> seg;
    for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
        const std::uint64_t hi = std::min(limit, lo + kSegment - 1);
        seg.assign(static_cast<std::size_t>(hi - lo + 1), false);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::uint64_t j = start; j <= hi; j += p)
                seg[static_cast<std::size_t>(j - lo)] = true;
        }
        for (std::uint64_t v = lo; v <= hi; ++v) {
            if (!seg[static_cast<std::size_t>(v - lo)]) {
                if (!fn(v)) return false;
            }
        }
    }
    return true;
}

} // namespace galid

#endif // GALID_PRIMES_HPP
