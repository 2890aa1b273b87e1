#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edsm/lce_index.hpp"
#include "edsm/suffix_tree.hpp"

namespace edsm {

// pattern split into text fragments plus single bytes absent from the text
struct DecompPart {
    int begin = 0;
    int end = 0;
    int literal = -1;  // byte value when >= 0; fragment [begin,end) otherwise
};

struct Decomposition {
    std::vector<DecompPart> parts;
};

// greedy split of `pattern` into at most 2k+1 parts, each a maximal substring
// of the tree's text or a single absent byte; nullopt when that is impossible
std::optional<Decomposition> decompose(const SuffixTree& st, std::string_view pattern, int k);

// indices of one representative per distinct part-endpoint signature; literal
// bytes collapse because any byte absent from the text mismatches every text
// position equally
std::vector<int> dedup(const std::vector<Decomposition>& ds);

// dictionary over equal-length buckets answering "is some pattern within
// Hamming distance `budget` of this text fragment"; built once per text
class Errata {
public:
    Errata(std::string text, std::vector<std::string> patterns, int k);

    bool query_min_le(int begin, int len, int budget) const;

    int budget_limit() const { return k_; }

    // copy totals per recursion level, one vector per length bucket
    const std::vector<std::vector<long long>>& level_counts() const { return level_counts_; }

private:
    struct Copy {
        int pat = 0;
        std::vector<int> fixes;  // positions matched for free, ascending
    };
    struct Node {
        int depth = 0;
        std::vector<std::pair<int, int>> light;  // (edge char, chain), sorted
    };
    struct Chain {
        int rep = 0;    // copy whose string spells the whole path
        int entry = 0;  // first depth this chain matches
        int et = -1;    // trie holding one-substitution variants
        std::vector<Node> nodes;
    };
    struct Trie {
        int root_chain = 0;
    };

    int char_at(const Copy& c, int depth) const;
    int build_trie(const std::vector<int>& copy_set, int level, std::vector<long long>& stats);
    int build_chain(const std::vector<int>& copy_set, int entry, int level,
                    std::vector<long long>& stats);
    bool query_trie(int trie, int begin, int budget) const;
    bool enter_chain(int chain, int begin, int budget) const;
    bool walk(int chain, int from, int begin, int budget) const;

    int k_ = 0;
    std::string text_;
    std::vector<std::string> patterns_;
    LceIndex idx_;
    std::vector<Copy> copies_;
    std::vector<Chain> chains_;
    std::vector<Trie> tries_;
    std::map<int, int> root_by_len_;
    std::vector<std::vector<long long>> level_counts_;
};

}  // namespace edsm
