#include "edsm/engine.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace edsm {

namespace {

std::vector<std::string> collect_members(const std::string& pattern, const EDString& text) {
    std::vector<std::string> ms{pattern};
    for (const Symbol& s : text.symbols)
        for (const std::string& a : s.alternatives) ms.push_back(a);
    return ms;
}

}  // namespace

EngineState::EngineState(const std::string& pattern, const EDString& text, int k_, Algo algo_)
    : eds(&text),
      idx(collect_members(pattern, text)),
      m(int(pattern.size())),
      k(k_),
      algo(algo_),
      b(k_ + 1, int(pattern.size())) {
    if (m < 1) throw std::invalid_argument("pattern must be nonempty");
    int next = 1;
    for (const Symbol& s : text.symbols) {
        std::vector<int> ids;
        for (size_t a = 0; a < s.alternatives.size(); ++a) ids.push_back(next++);
        member_of.push_back(std::move(ids));
    }
    for (int d = 0; d <= k; ++d) b.row(d).set(0);
    const Bands bd = dispatch_bands(m, k);
    if (algo == Algo::FastApe && k == 1 && bd.very_short_hi >= 1)
        vs_cache.emplace(idx, Frag{0, 0, m}, bd.very_short_hi);
}

bool scan_symbol_full(const EngineState& st, int symbol) {
    const Frag p{0, 0, st.m};
    for (int mem : st.member_of[size_t(symbol)]) {
        const int xlen = st.idx.member_len(mem);
        for (int x = 0; x + st.m <= xlen; ++x)
            if (kangaroo_mismatches(st.idx, p, Frag{mem, x, st.m}, st.k)) return true;
    }
    return false;
}

BitMatrix prefixes_within_symbol(const EngineState& st, int symbol) {
    BitMatrix rows(st.k + 1, st.m);
    for (int mem : st.member_of[size_t(symbol)]) {
        const int xlen = st.idx.member_len(mem);
        for (int len = 1; len <= std::min(st.m - 1, xlen); ++len) {
            auto mis = kangaroo_mismatches(st.idx, Frag{0, 0, len},
                                           Frag{mem, xlen - len, len}, st.k);
            if (!mis) continue;
            for (int d = int(mis->size()); d <= st.k; ++d) rows.row(d).set(len);
        }
    }
    return rows;
}

bool report_boundary(const EngineState& st, int symbol) {
    for (int mem : st.member_of[size_t(symbol)]) {
        const int xlen = st.idx.member_len(mem);
        for (int j = std::max(0, st.m - xlen); j < st.m; ++j) {
            int dmin = -1;
            for (int d = 0; d <= st.k; ++d)
                if (st.b.row(d).get(j)) {
                    dmin = d;
                    break;
                }
            if (dmin < 0) continue;
            if (kangaroo_mismatches(st.idx, Frag{0, j, st.m - j},
                                    Frag{mem, 0, st.m - j}, st.k - dmin))
                return true;
        }
    }
    return false;
}

void step(EngineState& st, int symbol, RunStats* stats) {
    const Symbol& sym = st.eds->symbols[size_t(symbol)];
    BitMatrix rows = prefixes_within_symbol(st, symbol);
    if (!sym.alternatives.empty()) {
        ApeInstance inst;
        inst.idx = &st.idx;
        inst.text = Frag{0, 0, st.m};
        for (int mem : st.member_of[size_t(symbol)])
            inst.patterns.push_back(Frag{mem, 0, st.idx.member_len(mem)});
        inst.k = st.k;
        inst.u = st.b;
        const auto t0 = std::chrono::steady_clock::now();
        rows.or_with(st.algo == Algo::FastApe
                         ? ape_dispatch(inst, st.vs_cache ? &*st.vs_cache : nullptr)
                         : ape_naive(inst));
        if (stats) {
            const auto t1 = std::chrono::steady_clock::now();
            stats->ape_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
            stats->ape_calls += 1;
        }
    }
    if (sym.has_epsilon) rows.or_with(st.b);
    for (int d = 0; d <= st.k; ++d) rows.row(d).set(0);
    st.b = std::move(rows);
}

MatchReport run(const std::string& pattern, const EDString& text, int k, Algo algo,
                RunStats* stats) {
    EngineState st(pattern, text, k, algo);
    MatchReport report;
    for (int i = 0; i < text.length(); ++i) {
        if (scan_symbol_full(st, i) || report_boundary(st, i))
            report.end_positions.push_back(i);
        step(st, i, stats);
    }
    return report;
}

}  // namespace edsm
