#ifndef GALID_PERM_HPP
#define GALID_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "galid/factor_type.hpp"

namespace galid {

/// Permutation of {1..n}, stored as the image sequence (0-based internally,
/// 1-based in text I/O). Composition is function composition: (a*b)(i) = a(b(i)).
class Perm {
public:
    Perm() = default;

    static Perm identity(int n) {
        Perm p;
        p.img_.resize(static_cast<std::size_t>(n));
        std::iota(p.img_.begin(), p.img_.end(), static_cast<std::uint8_t>(0));
        return p;
    }

    /// From 1-based image list, e.g. {2,3,1} for the cycle (1 2 3).
    static Perm from_one_based(std::initializer_list<int> images) {
        return from_one_based(std::vector<int>(images));
    }

    static Perm from_one_based(const std::vector<int>& images) {
        Perm p;
        p.img_.reserve(images.size());
        for (int v : images) {
            if (v < 1 || v > static_cast<int>(images.size()))
                throw std::invalid_argument("Perm: image out of range");
            p.img_.push_back(static_cast<std::uint8_t>(v - 1));
        }
        p.validate();
        return p;
    }

    /// From disjoint cycles over {1..n}, e.g. cycles(4, {{1,2},{3,4}}).
    static Perm cycles(int n, std::initializer_list<std::initializer_list<int>> cyc) {
        Perm p = identity(n);
        for (const auto& c : cyc) {
            std::vector<int> v(c);
            for (std::size_t i = 0; i < v.size(); ++i) {
                int from = v[i], to = v[(i + 1) % v.size()];
                if (from < 1 || from > n || to < 1 || to > n)
                    throw std::invalid_argument("Perm::cycles: point out of range");
                p.img_[static_cast<std::size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
            }
        }
        p.validate();
        return p;
    }

    int degree() const noexcept { return static_cast<int>(img_.size()); }

    /// 0-based image.
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

    const std::vector<std::uint8_t>& images() const noexcept { return img_; }

    Perm operator*(const Perm& b) const {
        if (degree() != b.degree()) throw std::invalid_argument("Perm: degree mismatch");
        Perm r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            r.img_[i] = img_[b.img_[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            r.img_[img_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    bool is_identity() const noexcept {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    /// Multiset of disjoint-cycle lengths, fixed points included as 1s.
    FactorType cycle_type() const {
        FactorType t;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            std::size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = img_[j];
                ++len;
            }
            t.add(len);
        }
        return t;
    }

    /// +1 for even permutations, -1 for odd.
    int sign() const {
        const FactorType type = cycle_type();
        int transpositions = 0;
        for (int part : type.parts()) transpositions += part - 1;
        return (transpositions & 1) ? -1 : 1;
    }

    auto operator<=>(const Perm&) const = default;

    /// Cycle notation, 1-based: "(1 2 3)(4 5)" or "()" for the identity.
    std::string str() const {
        std::ostringstream os;
        std::vector<bool> seen(img_.size(), false);
        bool any = false;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == i) { seen[i] = true; continue; }
            any = true;
            os << '(';
            std::size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) os << ' ';
                first = false;
                os << (j + 1);
                j = img_[j];
            }
            os << ')';
        }
        if (!any) return "()";
        return os.str();
    }

private:
    void validate() const {
        std::vector<bool> seen(img_.size(), false);
        for (std::uint8_t v : img_) {
            if (v >= img_.size() || seen[v])
                throw std::invalid_argument("Perm: images are not a bijection");
            seen[v] = true;
        }
    }

    std::vector<std::uint8_t> img_;
};

inline std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.str(); }

} // namespace galid

#endif // GALID_PERM_HPP
