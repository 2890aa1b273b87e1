#pragma once

#include <vector>

namespace edsm {

// suffix array over an integer sequence, built by prefix doubling with
// counting sorts; lcp by Kasai's algorithm
struct SuffixArray {
    std::vector<int> sa;   // sorted suffix start positions
    std::vector<int> rank; // inverse of sa
    std::vector<int> lcp;  // lcp[i] = lcp(sa[i-1], sa[i]), lcp[0] = 0

    static SuffixArray build(const std::vector<int>& s);
};

// sparse-table range minimum over a fixed array
struct RangeMin {
    void build(const std::vector<int>& v);
    int min_in(int l, int r) const; // over [l, r), requires l < r

private:
    std::vector<std::vector<int>> t_;
    std::vector<int> lg_;
};

} // namespace edsm
