#ifndef GALID_FACTOR_TYPE_HPP
#define GALID_FACTOR_TYPE_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace galid {

/// Multiset of positive integers, stored sorted ascending.
///
/// This is the shared currency of the whole library: the degrees of the
/// irreducible factors of a polynomial mod p, the lengths of the disjoint
/// cycles of a permutation, and the lengths of coset orbits are all values
/// of this one type.
class FactorType {
public:
    FactorType() = default;

    FactorType(std::initializer_list<int> parts) : parts_(parts) { normalize(); }

    explicit FactorType(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<int>& parts() const noexcept { return parts_; }

    bool empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }

    int sum() const noexcept {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    void add(int part) {
        if (part < 1) throw std::invalid_argument("FactorType: parts must be >= 1");
        parts_.insert(std::upper_bound(parts_.begin(), parts_.end(), part), part);
    }

    auto operator<=>(const FactorType&) const = default;

    /// Renders as "{1,2,2}".
    std::string str() const {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << '}';
        return os.str();
    }

private:
    void normalize() {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("FactorType: parts must be >= 1");
        std::sort(parts_.begin(), parts_.end());
    }

    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const FactorType& t) {
    return os << t.str();
}

} // namespace galid

#endif // GALID_FACTOR_TYPE_HPP
