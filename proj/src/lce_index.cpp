#include "edsm/lce_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace edsm {

LceIndex::LceIndex(std::vector<std::string> members) : members_(std::move(members)) {
    offset_.resize(members_.size());
    std::vector<int> corpus;
    for (size_t i = 0; i < members_.size(); ++i) {
        offset_[i] = int(corpus.size());
        for (char c : members_[i]) corpus.push_back((unsigned char)c);
        corpus.push_back(256 + int(i)); // unique separator per member
    }
    total_ = int(corpus.size());
    fwd_ = SuffixArray::build(corpus);
    fwd_rmq_.build(fwd_.lcp);
    std::vector<int> rcorpus(corpus.rbegin(), corpus.rend());
    rev_ = SuffixArray::build(rcorpus);
    rev_rmq_.build(rev_.lcp);
}

int LceIndex::raw(const SuffixArray& sa, const RangeMin& rmq, int a, int b, int n) const {
    if (a == b) return n - a;
    int ra = sa.rank[a], rb = sa.rank[b];
    if (ra > rb) std::swap(ra, rb);
    return rmq.min_in(ra + 1, rb + 1);
}

int LceIndex::lce(int ma, int pa, int mb, int pb) const {
    int a = offset_[ma] + pa, b = offset_[mb] + pb;
    int g = raw(fwd_, fwd_rmq_, a, b, total_);
    // separators are unique, so g never covers one; cap is belt and braces
    return std::min({g, member_len(ma) - pa, member_len(mb) - pb});
}

int LceIndex::lce_back(int ma, int pa, int mb, int pb) const {
    int a = total_ - 1 - (offset_[ma] + pa), b = total_ - 1 - (offset_[mb] + pb);
    int g = raw(rev_, rev_rmq_, a, b, total_);
    return std::min({g, pa + 1, pb + 1});
}

int LceIndex::frag_lce(const Frag& a, int off_a, const Frag& b, int off_b) const {
    int g = lce(a.member, a.begin + off_a, b.member, b.begin + off_b);
    return std::min({g, a.len - off_a, b.len - off_b});
}

std::string pillar_extract(const LceIndex& idx, int member, int l, int r) {
    if (member < 0 || member >= idx.member_count() || l < 0 || r < l ||
        r >= idx.member_len(member))
        throw std::out_of_range("pillar_extract: bounds");
    return idx.member(member).substr(l, r - l + 1);
}

std::vector<Progression> pillar_ipm(const LceIndex& idx, const Frag& s, const Frag& t) {
    if (t.len > 2 * s.len) throw std::invalid_argument("pillar_ipm: |t| > 2|s|");
    std::vector<int> occ;
    for (int x = 0; x + s.len <= t.len; ++x)
        if (idx.frag_lce(s, 0, t, x) >= s.len) occ.push_back(x);

    std::vector<Progression> out;
    size_t i = 0;
    while (i < occ.size()) {
        if (i + 1 == occ.size()) {
            out.push_back({occ[i], 1, 1});
            break;
        }
        int step = occ[i + 1] - occ[i];
        size_t j = i + 1;
        while (j + 1 < occ.size() && occ[j + 1] - occ[j] == step) ++j;
        out.push_back({occ[i], step, int(j - i + 1)});
        i = j + 1;
    }
    return out;
}

std::optional<std::vector<int>> kangaroo_mismatches(const LceIndex& idx, const Frag& a,
                                                    const Frag& b, int budget) {
    if (a.len != b.len) throw std::invalid_argument("kangaroo_mismatches: length mismatch");
    std::vector<int> mis;
    int pos = 0;
    while (pos < a.len) {
        int g = idx.frag_lce(a, pos, b, pos);
        pos += g;
        if (pos >= a.len) break;
        mis.push_back(pos);
        if (int(mis.size()) > budget) return std::nullopt;
        ++pos;
    }
    return mis;
}

std::optional<std::vector<int>> periodic_mismatches(const LceIndex& idx, const Frag& frag,
                                                    const Frag& q, int offset, int budget) {
    if (q.len <= 0) throw std::invalid_argument("periodic_mismatches: empty period");
    std::vector<int> mis;
    int pos = 0;
    int n = frag.len, qn = q.len;
    while (pos < n) {
        int phase = (offset + pos) % qn;
        int want = std::min(n - pos, qn - phase);
        int g = std::min(idx.frag_lce(frag, pos, q, phase), want);
        if (g < want) {
            mis.push_back(pos + g);
            if (int(mis.size()) > budget) return std::nullopt;
            pos += g + 1;
            continue;
        }
        pos += g;
        if (pos >= n || phase != 0) continue;
        // a full period just matched ending at pos; self-overlap jump
        int g2 = std::min(idx.frag_lce(frag, pos, frag, pos - qn), n - pos);
        pos += g2;
        if (pos >= n) break;
        mis.push_back(pos);
        if (int(mis.size()) > budget) return std::nullopt;
        ++pos;
    }
    return mis;
}

} // namespace edsm
