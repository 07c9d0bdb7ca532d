#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sigma {

/// Dynamically sized bitset over a group's element indices [0, n).
/// Capacity is fixed at construction; binary operations assume operands
/// of identical capacity.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_(words_for(nbits), 0) {}

    static Bitset singleton(int nbits, int i) {
        Bitset b(nbits);
        b.set(i);
        return b;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const {
        return (w_[size_t(i) >> 6] >> (unsigned(i) & 63u)) & 1u;
    }
    void set(int i) { w_[size_t(i) >> 6] |= uint64_t(1) << (unsigned(i) & 63u); }
    void reset(int i) {
        w_[size_t(i) >> 6] &= ~(uint64_t(1) << (unsigned(i) & 63u));
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    bool empty() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    /// Removes every element of `o` from this set.
    Bitset& subtract(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    bool subset_of(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.w_ == b.w_;
    }
    friend bool operator!=(const Bitset& a, const Bitset& b) {
        return a.w_ != b.w_;
    }

    /// Smallest member, or -1 when empty.
    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t x = w_[k];
            while (x) {
                f(int(k * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size_t(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (uint64_t x : w_) {
            h ^= size_t(x);
            h *= 1099511628211ull;
        }
        return h;
    }

    /// Canonical order: the set containing the earliest differing element
    /// comes first. Used for deterministic tie-breaking everywhere.
    static bool lex_less(const Bitset& a, const Bitset& b) {
        for (size_t k = 0; k < a.w_.size(); ++k) {
            if (a.w_[k] != b.w_[k]) {
                uint64_t d = a.w_[k] ^ b.w_[k];
                return (a.w_[k] & (d & (~d + 1))) != 0;
            }
        }
        return false;
    }

private:
    static size_t words_for(int n) { return (size_t(n) + 63) / 64; }

    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace sigma
