#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace arrangelab {

/// Fixed-universe bitset over hyperplane indices 0..m-1.
///
/// Every set produced for one arrangement shares the same universe size, so
/// binary operations assume equal word counts.
class HyperplaneSet {
public:
    HyperplaneSet() = default;
    explicit HyperplaneSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static HyperplaneSet full(std::size_t universe) {
        HyperplaneSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    std::size_t universe() const { return universe_; }

    void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool contains(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const HyperplaneSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }
    bool intersects(const HyperplaneSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    HyperplaneSet& operator|=(const HyperplaneSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    HyperplaneSet& operator&=(const HyperplaneSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    HyperplaneSet& operator-=(const HyperplaneSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend HyperplaneSet operator|(HyperplaneSet a, const HyperplaneSet& b) { return a |= b; }
    friend HyperplaneSet operator&(HyperplaneSet a, const HyperplaneSet& b) { return a &= b; }
    friend HyperplaneSet operator-(HyperplaneSet a, const HyperplaneSet& b) { return a -= b; }

    friend bool operator==(const HyperplaneSet&, const HyperplaneSet&) = default;

    /// Lexicographic order on the sorted index lists.
    friend bool operator<(const HyperplaneSet& a, const HyperplaneSet& b) {
        return a.to_vector() < b.to_vector();
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                const int bit = std::countr_zero(w);
                f(k * 64 + static_cast<std::size_t>(bit));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = universe_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct HyperplaneSetHash {
    std::size_t operator()(const HyperplaneSet& s) const { return s.hash(); }
};

}  // namespace arrangelab
