#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ringspec {

/// Fixed-size bitset with the handful of operations the graph code needs.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() : n_(0) {}
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (uint64_t w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    std::size_t find_first() const { return scan(0, 0); }

    std::size_t find_next(std::size_t i) const {
        ++i;
        if (i >= n_) return npos;
        std::size_t blk = i >> 6;
        uint64_t w = w_[blk] & (~uint64_t{0} << (i & 63));
        if (w) return (blk << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
        return scan(blk + 1, 0);
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    template <typename Fn>
    void for_each(Fn fn) const {
        for (std::size_t i = find_first(); i != npos; i = find_next(i)) fn(i);
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

private:
    std::size_t scan(std::size_t blk, uint64_t) const {
        for (; blk < w_.size(); ++blk)
            if (w_[blk]) return (blk << 6) + static_cast<std::size_t>(__builtin_ctzll(w_[blk]));
        return npos;
    }

    std::size_t n_;
    std::vector<uint64_t> w_;
};

}  // namespace ringspec
