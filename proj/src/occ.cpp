#include "edsm/occ.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "edsm/eds.hpp"
#include "edsm/strutil.hpp"

namespace edsm {

std::vector<int> OccRep::materialize() const {
    if (kind == Kind::Explicit) return positions;
    std::vector<int> out;
    for (const auto& p : progressions)
        for (int i = 0; i < p.count; ++i) out.push_back(p.start + i * p.step);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> occ_scan(const LceIndex& idx, const Frag& p, const Frag& t, int kappa) {
    std::vector<int> out;
    for (int x = 0; x + p.len <= t.len; ++x) {
        Frag win{t.member, t.begin + x, p.len};
        if (kangaroo_mismatches(idx, p, win, kappa)) out.push_back(x);
    }
    return out;
}

std::string majority_candidate(std::string_view p, int q_len) {
    std::string q(q_len, 0);
    for (int c = 0; c < q_len; ++c) {
        std::array<int, 256> freq{};
        for (int j = c; j < int(p.size()); j += q_len) ++freq[(unsigned char)p[j]];
        int best = 0;
        for (int b = 1; b < 256; ++b)
            if (freq[b] > freq[best]) best = b;
        q[c] = char(best);
    }
    return q;
}

std::optional<PeriodCert> extract_period(std::string_view p, int kappa) {
    if (kappa < 1) throw std::invalid_argument("extract_period: budget must be >= 1");
    int n = int(p.size());
    int max_len = n / (128 * kappa);
    for (int L = 1; L <= max_len; ++L) {
        std::string q = majority_candidate(p, L);
        std::vector<int> mis;
        for (int j = 0; j < n && (int)mis.size() < 2 * kappa; ++j)
            if (p[j] != q[j % L]) mis.push_back(j);
        if ((int)mis.size() < 2 * kappa) {
            if (!is_primitive(q))
                throw InvariantError("majority-vote period is not primitive");
            return PeriodCert{std::move(q), 0, std::move(mis)};
        }
    }
    return std::nullopt;
}

namespace {

std::vector<Progression> runs_with_step(const std::vector<int>& occ, int step) {
    std::vector<Progression> out;
    size_t i = 0;
    while (i < occ.size()) {
        Progression run{occ[i], step, 1};
        while (i + 1 < occ.size() && occ[i + 1] == occ[i] + step) {
            ++run.count;
            ++i;
        }
        out.push_back(run);
        ++i;
    }
    return out;
}

OccRep explicit_rep(std::vector<int> occ) {
    OccRep rep;
    rep.kind = OccRep::Kind::Explicit;
    rep.positions = std::move(occ);
    return rep;
}

} // namespace

OccRep analyze(const LceIndex& idx, const Frag& p, const Frag& t, int kappa) {
    std::vector<int> occ = occ_scan(idx, p, t, kappa);
    int threshold = kappa == 0 ? 2 : 864 * kappa;
    if ((int)occ.size() <= threshold) return explicit_rep(std::move(occ));

    PeriodCert cert;
    if (kappa == 0) {
        // with dense exact matches in a short window the spacing is the
        // minimal period; anything irregular is out of the callers' domain
        int d0 = occ[1] - occ[0];
        bool uniform = true;
        for (size_t i = 2; i < occ.size(); ++i)
            if (occ[i] - occ[i - 1] != d0) { uniform = false; break; }
        if (!uniform || d0 > p.len) return explicit_rep(std::move(occ));
        std::string q0 = idx.frag_str(Frag{p.member, p.begin, d0});
        if (!is_primitive(q0)) return explicit_rep(std::move(occ));
        cert.q = std::move(q0);
    } else {
        auto found = extract_period(idx.frag_str(p), kappa);
        if (!found)
            throw InvariantError("dense occurrence set without a periodic source");
        cert = std::move(*found);
    }

    int qn = int(cert.q.size());
    int r = occ[0] % qn;
    cert.q = rotate_left(cert.q, ((-occ[0]) % qn + qn) % qn);
    cert.r = r;
    for (int x : occ)
        if (x % qn != r) {
            if (kappa == 0) return explicit_rep(std::move(occ));
            throw InvariantError("dense occurrences not congruent modulo the period");
        }

    OccRep rep;
    rep.kind = OccRep::Kind::Periodic;
    rep.cert = std::move(cert);
    rep.progressions = runs_with_step(occ, qn);
    return rep;
}

bool rep_contains(const OccRep& rep, int x) {
    if (rep.kind == OccRep::Kind::Explicit)
        return std::binary_search(rep.positions.begin(), rep.positions.end(), x);
    auto it = std::upper_bound(rep.progressions.begin(), rep.progressions.end(), x,
                               [](int v, const Progression& pr) { return v < pr.start; });
    if (it == rep.progressions.begin()) return false;
    return std::prev(it)->contains(x);
}

} // namespace edsm
