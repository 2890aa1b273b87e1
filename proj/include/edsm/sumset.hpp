#pragma once

#include <vector>

#include "edsm/bits.hpp"

namespace edsm {

// set of integers inside a fixed universe [0, bound)
class PosSet {
public:
    PosSet() = default;
    explicit PosSet(int bound) : bound_(bound), bits_(bound) {}

    static PosSet from(int bound, const std::vector<int>& xs) {
        PosSet p(bound);
        for (int x : xs) p.set(x);
        return p;
    }

    int bound() const { return bound_; }
    bool get(int x) const { return x >= 0 && x < bound_ && bits_.get(x); }
    void set(int x) { bits_.set(x); }
    int count() const { return bits_.count(); }
    bool empty() const { return !bits_.any(); }
    std::vector<int> ones() const { return bits_.ones(); }

    void and_with(const PosSet& o) { bits_.and_with(o.bits_); }
    void or_with(const PosSet& o) { bits_.or_with(o.bits_); }

    const Bits& bits() const { return bits_; }
    Bits& bits() { return bits_; }

    bool operator==(const PosSet& o) const { return bound_ == o.bound_ && bits_ == o.bits_; }

private:
    int bound_ = 0;
    Bits bits_;
};

struct ShiftResult {
    PosSet set;
    bool dropped = false; // true if any member left the universe
};

// translate by s (possibly negative) within the same universe
ShiftResult shift(const PosSet& x, int s);

// {a+b : a in x, b in y} over [0, x.bound + y.bound); picks the cheaper engine
PosSet sumset(const PosSet& x, const PosSet& y);

// the two engines, exposed for direct testing; same contract as sumset
PosSet sumset_fft(const PosSet& x, const PosSet& y);
PosSet sumset_shift_or(const PosSet& x, const PosSet& y);

} // namespace edsm
