#pragma once

#include <functional>
#include <string>
#include <vector>

#include "edsm/bits.hpp"
#include "edsm/lce_index.hpp"
#include "edsm/occ.hpp"
#include "edsm/suffix_tree.hpp"

namespace edsm {

struct BitMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Bits> r;

    BitMatrix() = default;
    BitMatrix(int rows_, int cols_) : rows(rows_), cols(cols_), r(size_t(rows_), Bits(cols_)) {}

    Bits& row(int d) { return r[size_t(d)]; }
    const Bits& row(int d) const { return r[size_t(d)]; }

    void or_with(const BitMatrix& o) {
        for (int d = 0; d < rows; ++d) r[size_t(d)].or_with(o.r[size_t(d)]);
    }
    bool operator==(const BitMatrix& o) const {
        return rows == o.rows && cols == o.cols && r == o.r;
    }
};

// active-prefix extension: text of length m, patterns appended to active
// positions, k+1 input rows U and output rows V with
// V_{d'}[j + |P|] set iff some U_d[j] holds with d' >= d + mismatches(P, text)
struct ApeInstance {
    const LceIndex* idx = nullptr;
    Frag text;
    std::vector<Frag> patterns;
    int k = 0;
    BitMatrix u;
};

// text split at its mismatches against a periodic model: region i is
// (tau[i-1] .. tau[i]], with tau[-1] = -1 and tau[b] = len as sentinels
struct RegionPartition {
    std::vector<int> tau;
    int len = 0;

    int count() const { return int(tau.size()) + 1; }
    int region_of(int x) const;
};

// candidate positions where a pattern mismatch can align with a text mismatch
std::vector<int> exception_set(const std::vector<int>& pat_mis, const std::vector<int>& tau);

// one window of a long-pattern instance: bucket patterns, budget kappa taking
// input row d_in to output row d_out, input row bits remapped to the window
struct RestrictedInstance {
    const LceIndex* idx = nullptr;
    Frag text;
    int window_offset = 0;
    double ell = 1.0;
    std::vector<Frag> patterns;
    int kappa = 0;
    int d_in = 0;
    int d_out = 0;
    Bits a;
};

// period-length threshold deciding sumset grouping vs direct enumeration
using ZRule = std::function<int(int d_hat, double ell)>;
int default_z(int d_hat, double ell);

// periodic-case internals of one restricted solve, exposed for property tests
struct PeriodicFrame {
    std::string q;
    int alpha = 0;
    int tlen = 0;
    std::vector<int> tau;
    struct Pat {
        int pattern = 0;
        int len = 0;
        int r = 0;
        int dp = 0;
        std::vector<int> mis;
        std::vector<int> exceptions;
    };
    std::vector<Pat> pats;
};

BitMatrix ape_naive(const ApeInstance& inst);

// text-side structures of the budget-1 solver: suffix trees of the text and
// its reverse plus fragment ids for every start and end, up to length cap;
// reusable across solves over the same text
struct VeryShortIndex {
    int cap = 0;
    std::string text_s, text_r;
    SuffixTree st, st_r;
    std::vector<std::vector<uint64_t>> pref, suf;

    VeryShortIndex(const LceIndex& idx, const Frag& text, int cap);
};

// budget-1 solver for patterns no longer than b_prime
BitMatrix ape_very_short(const ApeInstance& inst, int b_prime,
                         const VeryShortIndex* pre = nullptr);

// dictionary-based solver for short patterns
BitMatrix ape_short(const ApeInstance& inst);

std::vector<RestrictedInstance> make_restricted(const ApeInstance& inst, int b_floor);

// window-local result row of size |window|+1; bit j' means some pattern in A
// extends to j' within kappa mismatches
Bits solve_restricted(const RestrictedInstance& ri, const ZRule& z = {},
                      PeriodicFrame* frame = nullptr);

BitMatrix ape_long(const ApeInstance& inst, int b_floor, const ZRule& z = {});

// pattern-length bands: (0, very_short_hi] / (very_short_hi, short_hi] / rest
struct Bands {
    int very_short_hi = 0;
    int short_hi = 0;
};
Bands dispatch_bands(int m, int k);

BitMatrix ape_dispatch(const ApeInstance& inst, const VeryShortIndex* vs_pre = nullptr);

}  // namespace edsm
