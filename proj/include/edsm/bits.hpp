#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace edsm {

// fixed-size bit vector with word-level bulk ops
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i, bool v = true) {
        if (v)
            w_[i >> 6] |= uint64_t(1) << (i & 63);
        else
            w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void or_with(const Bits& o) {
        for (size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] |= o.w_[i];
        trim();
    }

    void and_with(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= i < o.w_.size() ? o.w_[i] : 0;
    }

    // this |= (o << s), bits shifted past size() are dropped
    void or_shifted(const Bits& o, int s) {
        if (s < 0) {
            int ws = (-s) >> 6, bs = (-s) & 63;
            for (size_t i = 0; i + ws < o.w_.size() && i < w_.size(); ++i) {
                uint64_t v = o.w_[i + ws] >> bs;
                if (bs && i + ws + 1 < o.w_.size()) v |= o.w_[i + ws + 1] << (64 - bs);
                w_[i] |= v;
            }
        } else {
            int ws = s >> 6, bs = s & 63;
            for (size_t i = 0; i < o.w_.size(); ++i) {
                if (i + ws < w_.size()) w_[i + ws] |= bs ? (o.w_[i] << bs) : o.w_[i];
                if (bs && i + ws + 1 < w_.size()) w_[i + ws + 1] |= o.w_[i] >> (64 - bs);
            }
        }
        trim();
    }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    std::vector<int> ones() const {
        std::vector<int> r;
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                r.push_back(int(wi) * 64 + b);
                w &= w - 1;
            }
        }
        return r;
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }

private:
    void trim() {
        if (n_ & 63 && !w_.empty()) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace edsm
