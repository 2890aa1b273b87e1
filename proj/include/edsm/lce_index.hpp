#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edsm/suffix_array.hpp"

namespace edsm {

// half-open fragment of one member string
struct Frag {
    int member = 0;
    int begin = 0;
    int len = 0;
};

// arithmetic progression of positions
struct Progression {
    int start = 0;
    int step = 1;
    int count = 0;

    int back() const { return start + step * (count - 1); }
    bool contains(int x) const {
        return x >= start && x <= back() && (x - start) % step == 0;
    }
};

// longest-common-extension oracle over a family of strings.  Members are
// joined with separators outside the data alphabet, so queries never cross
// member boundaries.  A mirrored instance over the reversed corpus serves
// suffix-side queries.
class LceIndex {
public:
    explicit LceIndex(std::vector<std::string> members);

    int member_count() const { return int(members_.size()); }
    int member_len(int id) const { return int(members_[id].size()); }
    const std::string& member(int id) const { return members_[id]; }
    unsigned char at(int member, int pos) const {
        return (unsigned char)members_[member][pos];
    }

    // longest common prefix of the member suffixes starting at the given
    // positions, capped at the member ends
    int lce(int ma, int pa, int mb, int pb) const;

    // longest common suffix of the member prefixes ending at the given
    // positions (inclusive), capped at the member starts
    int lce_back(int ma, int pa, int mb, int pb) const;

    int frag_lce(const Frag& a, int off_a, const Frag& b, int off_b) const;

    std::string frag_str(const Frag& f) const {
        return members_[f.member].substr(f.begin, f.len);
    }

private:
    int raw(const SuffixArray& sa, const RangeMin& rmq, int a, int b, int n) const;

    std::vector<std::string> members_;
    std::vector<int> offset_;
    int total_ = 0;
    SuffixArray fwd_, rev_;
    RangeMin fwd_rmq_, rev_rmq_;
};

// retrieve s[l..r] (both ends inclusive); throws std::out_of_range
std::string pillar_extract(const LceIndex& idx, int member, int l, int r);

// exact occurrences of s in t where |t| <= 2|s|, as at most two progressions;
// throws std::invalid_argument when the length contract is violated
std::vector<Progression> pillar_ipm(const LceIndex& idx, const Frag& s, const Frag& t);

// mismatch offsets between equal-length fragments, abandoning once the count
// exceeds budget; O(budget+1) lce queries
std::optional<std::vector<int>> kangaroo_mismatches(const LceIndex& idx, const Frag& a,
                                                    const Frag& b, int budget);

// mismatch offsets of frag against the infinite repetition of q read from
// phase `offset`, abandoning past budget; O(1) lce queries per mismatch
std::optional<std::vector<int>> periodic_mismatches(const LceIndex& idx, const Frag& frag,
                                                    const Frag& q, int offset, int budget);

} // namespace edsm
