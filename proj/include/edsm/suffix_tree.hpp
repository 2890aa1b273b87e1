#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace edsm {

// compact suffix tree over a single text, built from its suffix array.
// A locus names a substring: the lower endpoint of the current edge plus the
// number of characters matched from the root.  Identifiers are injective over
// distinct substrings.
class SuffixTree {
public:
    explicit SuffixTree(std::string_view text);

    struct Locus {
        int node = 0;
        int depth = 0; // characters matched from root
    };

    Locus root() const { return {0, 0}; }

    // advance by one character; returns false (and nulls the locus) on failure
    bool step(Locus& loc, unsigned char c) const;

    static bool is_null(const Locus& l) { return l.node < 0; }
    static Locus null_locus() { return {-1, 0}; }

    // injective over substrings; 0 reserved for null
    uint64_t id(const Locus& l) const {
        if (is_null(l)) return 0;
        return (uint64_t(nodes_[l.node].preorder) << 24) | uint64_t(l.depth + 1);
    }

    // a text position where the locus substring occurs
    int occurrence_pos(const Locus& l) const { return nodes_[l.node].pos; }

    int text_len() const { return n_; }

private:
    struct Node {
        int parent = -1;
        int depth = 0; // string depth of this node
        int pos = 0;   // a text position where this node's string starts
        int preorder = 0;
        std::vector<std::pair<int, int>> kids; // (first char, node), sorted
    };

    int child_of(int node, int c) const;

    std::string text_;
    int n_ = 0;
    std::vector<Node> nodes_;
};

// identifiers of every prefix of s when read against the tree; entry i covers
// s[0..i]; null persists once navigation fails
std::vector<uint64_t> substring_id_walk(const SuffixTree& st, std::string_view s);

} // namespace edsm
