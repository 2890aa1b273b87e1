#include "edsm/kerrata.hpp"

#include <algorithm>
#include <stdexcept>

namespace edsm {

namespace {

constexpr int kWildcard = 256;

std::vector<std::string> errata_members(const std::string& text,
                                        const std::vector<std::string>& patterns) {
    std::vector<std::string> m;
    m.reserve(patterns.size() + 1);
    m.push_back(text);
    for (const auto& p : patterns) m.push_back(p);
    return m;
}

}  // namespace

std::optional<Decomposition> decompose(const SuffixTree& st, std::string_view pattern, int k) {
    Decomposition d;
    const int limit = 2 * k + 1;
    size_t i = 0;
    while (i < pattern.size()) {
        if (int(d.parts.size()) == limit) return std::nullopt;
        SuffixTree::Locus loc = st.root();
        int len = 0;
        while (i + size_t(len) < pattern.size()) {
            SuffixTree::Locus next = loc;
            if (!st.step(next, (unsigned char)pattern[i + size_t(len)])) break;
            loc = next;
            ++len;
        }
        if (len == 0) {
            DecompPart p;
            p.literal = (unsigned char)pattern[i];
            d.parts.push_back(p);
            i += 1;
        } else {
            DecompPart p;
            p.begin = st.occurrence_pos(loc);
            p.end = p.begin + len;
            d.parts.push_back(p);
            i += size_t(len);
        }
    }
    return d;
}

std::vector<int> dedup(const std::vector<Decomposition>& ds) {
    std::vector<int> keep;
    std::map<std::vector<std::pair<int, int>>, int> seen;
    for (int i = 0; i < int(ds.size()); ++i) {
        std::vector<std::pair<int, int>> key;
        key.reserve(ds[i].parts.size());
        for (const auto& p : ds[i].parts) {
            if (p.literal >= 0)
                key.emplace_back(0, 0);
            else
                key.emplace_back(p.begin + 1, p.end);
        }
        if (seen.emplace(std::move(key), i).second) keep.push_back(i);
    }
    return keep;
}

Errata::Errata(std::string text, std::vector<std::string> patterns, int k)
    : k_(k), text_(std::move(text)), patterns_(std::move(patterns)),
      idx_(errata_members(text_, patterns_)) {
    if (k_ < 0) throw std::invalid_argument("negative budget");
    std::map<int, std::vector<int>> by_len;
    for (int i = 0; i < int(patterns_.size()); ++i) {
        if (patterns_[i].empty()) throw std::invalid_argument("empty pattern");
        copies_.push_back(Copy{i, {}});
        by_len[int(patterns_[i].size())].push_back(i);
    }
    for (const auto& [len, ids] : by_len) {
        std::vector<long long> stats;
        root_by_len_[len] = build_trie(ids, 0, stats);
        level_counts_.push_back(std::move(stats));
    }
}

int Errata::char_at(const Copy& c, int depth) const {
    if (std::binary_search(c.fixes.begin(), c.fixes.end(), depth)) return kWildcard;
    return (unsigned char)patterns_[c.pat][size_t(depth)];
}

int Errata::build_trie(const std::vector<int>& copy_set, int level, std::vector<long long>& stats) {
    if (int(stats.size()) <= level) stats.resize(size_t(level) + 1, 0);
    stats[size_t(level)] += (long long)copy_set.size();
    int tid = int(tries_.size());
    tries_.push_back(Trie{});
    int root = build_chain(copy_set, 0, level, stats);
    tries_[size_t(tid)].root_chain = root;
    return tid;
}

int Errata::build_chain(const std::vector<int>& copy_set, int entry, int level,
                        std::vector<long long>& stats) {
    int cid = int(chains_.size());
    chains_.emplace_back();
    Chain c;
    c.entry = entry;
    std::vector<int> cur = copy_set;
    std::vector<Copy> et_copies;
    const int full = int(patterns_[copies_[size_t(cur[0])].pat].size());
    for (int d = entry; d < full; ++d) {
        std::map<int, std::vector<int>> groups;
        for (int id : cur) groups[char_at(copies_[size_t(id)], d)].push_back(id);
        if (groups.size() == 1) continue;
        int heavy = groups.begin()->first;
        for (const auto& [ch, g] : groups)
            if (g.size() > groups.at(heavy).size()) heavy = ch;
        Node node;
        node.depth = d;
        for (const auto& [ch, g] : groups) {
            if (ch == heavy) continue;
            if (level < k_) {
                for (int id : g) {
                    Copy cp = copies_[size_t(id)];
                    cp.fixes.insert(std::lower_bound(cp.fixes.begin(), cp.fixes.end(), d), d);
                    et_copies.push_back(std::move(cp));
                }
            }
            node.light.emplace_back(ch, build_chain(g, d + 1, level, stats));
        }
        std::sort(node.light.begin(), node.light.end());
        c.nodes.push_back(std::move(node));
        cur = groups.at(heavy);
    }
    c.rep = cur[0];
    if (!et_copies.empty()) {
        std::vector<int> ids;
        ids.reserve(et_copies.size());
        for (auto& cp : et_copies) {
            ids.push_back(int(copies_.size()));
            copies_.push_back(std::move(cp));
        }
        c.et = build_trie(ids, level + 1, stats);
    }
    chains_[size_t(cid)] = std::move(c);
    return cid;
}

bool Errata::query_min_le(int begin, int len, int budget) const {
    if (begin < 0 || len <= 0 || begin + len > int(text_.size()))
        throw std::out_of_range("query fragment out of range");
    if (budget > k_) budget = k_;
    if (budget < 0) return false;
    auto it = root_by_len_.find(len);
    if (it == root_by_len_.end()) return false;
    return query_trie(it->second, begin, budget);
}

bool Errata::query_trie(int trie, int begin, int budget) const {
    return enter_chain(tries_[size_t(trie)].root_chain, begin, budget);
}

bool Errata::enter_chain(int chain, int begin, int budget) const {
    const Chain& c = chains_[size_t(chain)];
    if (budget > 0 && c.et >= 0 && query_trie(c.et, begin, budget - 1)) return true;
    return walk(chain, c.entry, begin, budget);
}

bool Errata::walk(int chain, int from, int begin, int budget) const {
    const Chain& c = chains_[size_t(chain)];
    const Copy& rep = copies_[size_t(c.rep)];
    const int full = int(patterns_[rep.pat].size());
    const Frag qfrag{0, begin, full};
    const Frag pfrag{rep.pat + 1, 0, full};
    int j = from;
    size_t ni = 0;
    while (ni < c.nodes.size() && c.nodes[ni].depth < j) ++ni;
    size_t fi = size_t(std::lower_bound(rep.fixes.begin(), rep.fixes.end(), j) -
                       rep.fixes.begin());
    while (true) {
        const int stop = ni < c.nodes.size() ? c.nodes[ni].depth : full;
        while (j < stop) {
            while (fi < rep.fixes.size() && rep.fixes[fi] < j) ++fi;
            if (fi < rep.fixes.size() && rep.fixes[fi] == j) {
                ++j;
                ++fi;
                continue;
            }
            int seg_end = stop;
            if (fi < rep.fixes.size() && rep.fixes[fi] < stop) seg_end = rep.fixes[fi];
            int g = idx_.frag_lce(qfrag, j, pfrag, j);
            if (g > seg_end - j) g = seg_end - j;
            j += g;
            if (j < seg_end) return budget > 0 && walk(chain, j + 1, begin, budget - 1);
        }
        if (ni >= c.nodes.size()) return true;
        const Node& nd = c.nodes[ni];
        const int xc = (unsigned char)text_[size_t(begin + j)];
        for (const auto& [ch, child] : nd.light)
            if ((ch == xc || ch == kWildcard) && enter_chain(child, begin, budget)) return true;
        const int hc = char_at(rep, j);
        if (hc == kWildcard || hc == xc) {
            ++j;
            ++ni;
            continue;
        }
        return budget > 0 && walk(chain, j + 1, begin, budget - 1);
    }
}

}  // namespace edsm
