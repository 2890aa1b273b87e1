#include "oracle.hpp"

#include <algorithm>
#include <set>

namespace edsm::oracle {

namespace {

int ham(const std::string& a, int apos, const std::string& b, int bpos, int len, int cap) {
    int d = 0;
    for (int i = 0; i < len; ++i)
        if (a[apos + i] != b[bpos + i] && ++d > cap) return d;
    return d;
}

} // namespace

NaiveRun edsm_naive_run(const std::string& p, const EDString& text, int k) {
    int m = int(p.size());
    NaiveRun out;
    std::vector<std::vector<uint8_t>> act(k + 1, std::vector<uint8_t>(m, 0));
    for (int d = 0; d <= k; ++d) act[d][0] = 1;

    for (int i = 0; i < text.length(); ++i) {
        const Symbol& sym = text.symbols[size_t(i)];
        std::vector<std::string> alts = sym.alternatives;
        if (sym.has_epsilon) alts.push_back("");
        bool hit = false;
        std::vector<std::vector<uint8_t>> next(k + 1, std::vector<uint8_t>(m, 0));
        for (int d = 0; d <= k; ++d) next[d][0] = 1;

        for (const std::string& a : alts) {
            int L = int(a.size());
            for (int s = 0; s + m <= L; ++s)
                if (ham(p, 0, a, s, m, k) <= k) hit = true;
            for (int s = std::max(0, L - (m - 1)); s < L; ++s) {
                int len = L - s;
                int d0 = ham(p, 0, a, s, len, k);
                for (int d = d0; d <= k; ++d) next[d][len] = 1;
            }
            for (int d = 0; d <= k; ++d) {
                for (int j = 0; j < m; ++j) {
                    if (!act[d][j]) continue;
                    if (j + L <= m - 1) {
                        int dd = d + ham(p, j, a, 0, L, k - d);
                        for (int e = dd; e <= k; ++e) next[e][j + L] = 1;
                    } else {
                        int need = m - j;
                        if (need <= L && d + ham(p, j, a, 0, need, k - d) <= k) hit = true;
                    }
                }
            }
        }
        act = std::move(next);
        if (hit) out.ends.push_back(i);
        out.rows_after.push_back(act);
    }
    return out;
}

std::vector<int> edsm_naive(const std::string& pattern, const EDString& text, int k) {
    return edsm_naive_run(pattern, text, k).ends;
}

std::vector<int> occ_naive(const std::string& p, const std::string& t, int kappa) {
    std::vector<int> out;
    for (int x = 0; x + int(p.size()) <= int(t.size()); ++x) {
        int d = 0;
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] != t[x + i]) ++d;
        if (d <= kappa) out.push_back(x);
    }
    return out;
}

std::vector<std::vector<uint8_t>> ape_bruteforce(const std::string& text,
                                                 const std::vector<std::string>& patterns,
                                                 int k,
                                                 const std::vector<std::vector<uint8_t>>& u) {
    int m = int(text.size());
    std::vector<std::vector<uint8_t>> v(k + 1, std::vector<uint8_t>(m, 0));
    for (const std::string& p : patterns) {
        int len = int(p.size());
        for (int j = 0; j + len <= m - 1; ++j) {
            for (int d = 0; d <= k; ++d) {
                if (!u[d][j]) continue;
                int dd = d + ham(p, 0, text, j, len, k - d);
                for (int e = dd; e <= k; ++e) v[e][j + len] = 1;
            }
        }
    }
    return v;
}

std::vector<int> sumset_naive(const std::vector<int>& x, const std::vector<int>& y) {
    std::set<int> s;
    for (int a : x)
        for (int b : y) s.insert(a + b);
    return std::vector<int>(s.begin(), s.end());
}

} // namespace edsm::oracle
