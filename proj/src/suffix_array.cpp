#include "edsm/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace edsm {

SuffixArray SuffixArray::build(const std::vector<int>& s) {
    int n = int(s.size());
    SuffixArray r;
    r.sa.resize(n);
    r.rank.resize(n);
    if (n == 0) return r;

    // initial ranks from symbol values
    std::iota(r.sa.begin(), r.sa.end(), 0);
    std::sort(r.sa.begin(), r.sa.end(), [&](int a, int b) { return s[a] < s[b]; });
    r.rank[r.sa[0]] = 0;
    for (int i = 1; i < n; ++i)
        r.rank[r.sa[i]] = r.rank[r.sa[i - 1]] + (s[r.sa[i]] != s[r.sa[i - 1]] ? 1 : 0);

    std::vector<int> tmp(n), cnt, sa2(n);
    for (int len = 1; len < n; len <<= 1) {
        // sort by (rank[i], rank[i+len]) with two counting passes
        int classes = *std::max_element(r.rank.begin(), r.rank.end()) + 1;
        if (classes == n) break;

        // pass 1: suffixes ordered by second key = positions i with i+len first
        int p = 0;
        for (int i = n - len; i < n; ++i) sa2[p++] = i;
        for (int i = 0; i < n; ++i)
            if (r.sa[i] >= len) sa2[p++] = r.sa[i] - len;

        // pass 2: stable counting sort by first key
        cnt.assign(classes, 0);
        for (int i = 0; i < n; ++i) cnt[r.rank[i]]++;
        for (int i = 1; i < classes; ++i) cnt[i] += cnt[i - 1];
        for (int i = n - 1; i >= 0; --i) r.sa[--cnt[r.rank[sa2[i]]]] = sa2[i];

        tmp[r.sa[0]] = 0;
        for (int i = 1; i < n; ++i) {
            int a = r.sa[i], b = r.sa[i - 1];
            bool same = r.rank[a] == r.rank[b] && a + len < n && b + len < n &&
                        r.rank[a + len] == r.rank[b + len];
            if (r.rank[a] == r.rank[b] && a + len >= n && b + len >= n) same = true;
            tmp[a] = tmp[b] + (same ? 0 : 1);
        }
        r.rank = tmp;
    }

    // Kasai lcp
    r.lcp.assign(n, 0);
    int h = 0;
    for (int i = 0; i < n; ++i) {
        if (r.rank[i] == 0) {
            h = 0;
            continue;
        }
        int j = r.sa[r.rank[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        r.lcp[r.rank[i]] = h;
        if (h) --h;
    }
    return r;
}

void RangeMin::build(const std::vector<int>& v) {
    int n = int(v.size());
    lg_.assign(n + 1, 0);
    for (int i = 2; i <= n; ++i) lg_[i] = lg_[i / 2] + 1;
    int levels = n ? lg_[n] + 1 : 1;
    t_.assign(levels, {});
    t_[0] = v;
    for (int j = 1; j < levels; ++j) {
        t_[j].resize(n - (1 << j) + 1);
        for (int i = 0; i + (1 << j) <= n; ++i)
            t_[j][i] = std::min(t_[j - 1][i], t_[j - 1][i + (1 << (j - 1))]);
    }
}

int RangeMin::min_in(int l, int r) const {
    int j = lg_[r - l];
    return std::min(t_[j][l], t_[j][r - (1 << j)]);
}

} // namespace edsm
