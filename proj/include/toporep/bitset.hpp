#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace toporep {

/// Fixed-size dynamic bitset used by the graph solvers.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }
    bool test(int i) const { return w_[i >> 6] >> (i & 63) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    bool any() const { return !none(); }

    int first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    bool operator==(const Bitset&) const = default;

    int intersect_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            auto x = w_[k];
            while (x) {
                f(static_cast<int>(k * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    static Bitset full(int n) {
        Bitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace toporep
