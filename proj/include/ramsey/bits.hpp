#pragma once
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace ramsey {

// fixed-universe bit vector; the hot loops everywhere are intersections and
// popcounts over these.  Bits past n are kept zero at all times.
class Bitset {
  public:
    Bitset() : n_(0) {}
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) { assert(n >= 0); }

    static Bitset full(int n) {
        Bitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    void set(int i) {
        assert(0 <= i && i < n_);
        w_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(0 <= i && i < n_);
        w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    bool test(int i) const {
        assert(0 <= i && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
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

    // smallest member, -1 when empty
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }
    // smallest member > i, -1 when none
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t k = size_t(i) >> 6;
        uint64_t x = w_[k] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (x) return int(k * 64 + std::countr_zero(x));
            if (++k == w_.size()) return -1;
            x = w_[k];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // set difference
    Bitset& operator-=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    // complement within the universe
    Bitset complement() const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    int count_and(const Bitset& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // order of the sorted member lists; used for every "lexicographically
    // smallest set" tie-break.  {0,5} < {1,2} because 0 < 1.
    static bool lex_less(const Bitset& a, const Bitset& b) {
        assert(a.n_ == b.n_);
        int x = a.first(), y = b.first();
        while (x != -1 && y != -1) {
            if (x != y) return x < y;
            x = a.next(x);
            y = b.next(y);
        }
        return y != -1;  // proper prefix is smaller
    }

    std::vector<int> members() const {
        std::vector<int> v;
        v.reserve(count());
        for (int i = first(); i != -1; i = next(i)) v.push_back(i);
        return v;
    }

    static Bitset of(int n, const std::vector<int>& members) {
        Bitset b(n);
        for (int i : members) b.set(i);
        return b;
    }

  private:
    void trim() {
        if (n_ & 63) w_.back() &= ~uint64_t(0) >> (64 - (n_ & 63));
        if (n_ == 0 && !w_.empty()) w_.back() = 0;
    }

    int n_;
    std::vector<uint64_t> w_;
};

}  // namespace ramsey
