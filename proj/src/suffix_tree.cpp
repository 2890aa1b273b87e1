#include "edsm/suffix_tree.hpp"

#include <algorithm>
#include <cassert>

#include "edsm/suffix_array.hpp"

namespace edsm {

SuffixTree::SuffixTree(std::string_view text) : text_(text), n_(int(text.size())) {
    int N = n_ + 1; // with terminator
    std::vector<int> seq(N);
    for (int i = 0; i < n_; ++i) seq[i] = (unsigned char)text_[i];
    seq[n_] = 256;
    SuffixArray sa = SuffixArray::build(seq);

    nodes_.push_back(Node{-1, 0, 0, 0, {}});
    std::vector<int> stk{0};
    for (int i = 0; i < N; ++i) {
        int l = i ? sa.lcp[i] : 0;
        int last = -1;
        while (nodes_[stk.back()].depth > l) {
            last = stk.back();
            stk.pop_back();
        }
        int top = stk.back();
        if (nodes_[top].depth < l) {
            assert(last >= 0);
            int mid = int(nodes_.size());
            nodes_.push_back(Node{top, l, nodes_[last].pos, 0, {}});
            nodes_[last].parent = mid;
            stk.push_back(mid);
            top = mid;
        }
        int leaf = int(nodes_.size());
        nodes_.push_back(Node{top, N - sa.sa[i], sa.sa[i], 0, {}});
        stk.push_back(leaf);
    }

    auto chr = [&](int pos) { return pos < n_ ? int((unsigned char)text_[pos]) : 256; };
    for (int v = 1; v < int(nodes_.size()); ++v) {
        int p = nodes_[v].parent;
        nodes_[p].kids.push_back({chr(nodes_[v].pos + nodes_[p].depth), v});
    }
    for (auto& nd : nodes_) std::sort(nd.kids.begin(), nd.kids.end());

    int pre = 0;
    std::vector<int> dfs{0};
    while (!dfs.empty()) {
        int v = dfs.back();
        dfs.pop_back();
        nodes_[v].preorder = pre++;
        for (auto it = nodes_[v].kids.rbegin(); it != nodes_[v].kids.rend(); ++it)
            dfs.push_back(it->second);
    }
}

int SuffixTree::child_of(int node, int c) const {
    const auto& ks = nodes_[node].kids;
    auto it = std::lower_bound(ks.begin(), ks.end(), std::pair<int, int>{c, -1});
    if (it != ks.end() && it->first == c) return it->second;
    return -1;
}

bool SuffixTree::step(Locus& loc, unsigned char c) const {
    if (is_null(loc)) return false;
    if (loc.depth == nodes_[loc.node].depth) {
        int ch = child_of(loc.node, c);
        if (ch < 0) {
            loc = null_locus();
            return false;
        }
        loc = {ch, loc.depth + 1};
        return true;
    }
    int pos = nodes_[loc.node].pos + loc.depth;
    if (pos < n_ && (unsigned char)text_[pos] == c) {
        ++loc.depth;
        return true;
    }
    loc = null_locus();
    return false;
}

std::vector<uint64_t> substring_id_walk(const SuffixTree& st, std::string_view s) {
    std::vector<uint64_t> out;
    out.reserve(s.size());
    auto loc = st.root();
    for (unsigned char c : s) {
        st.step(loc, c);
        out.push_back(st.id(loc));
    }
    return out;
}

} // namespace edsm
