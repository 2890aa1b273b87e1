#include "edsm/ape.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "edsm/eds.hpp"
#include "edsm/kerrata.hpp"
#include "edsm/strutil.hpp"
#include "edsm/suffix_tree.hpp"
#include "edsm/sumset.hpp"

namespace edsm {

int RegionPartition::region_of(int x) const {
    return int(std::lower_bound(tau.begin(), tau.end(), x) - tau.begin());
}

std::vector<int> exception_set(const std::vector<int>& pat_mis, const std::vector<int>& tau) {
    std::set<int> e;
    for (int t : tau)
        for (int p : pat_mis) e.insert(t - p);
    return {e.begin(), e.end()};
}

int default_z(int d_hat, double ell) {
    const double lg = std::max(1.0, std::log2(ell));
    return int(std::ceil(std::sqrt(double(d_hat) / lg)));
}

BitMatrix ape_naive(const ApeInstance& inst) {
    const int m = inst.text.len;
    const int k = inst.k;
    BitMatrix v(k + 1, m);
    const std::string& tm = inst.idx->member(inst.text.member);
    const int tb = inst.text.begin;
    for (const Frag& p : inst.patterns) {
        const std::string& pm = inst.idx->member(p.member);
        const int len = p.len;
        for (int j = 0; j + len <= m - 1; ++j) {
            int delta = 0;
            for (int t = 0; t < len && delta <= k; ++t)
                delta += pm[size_t(p.begin + t)] != tm[size_t(tb + j + t)];
            if (delta > k) continue;
            for (int d = 0; d + delta <= k; ++d) {
                if (!inst.u.row(d).get(j)) continue;
                for (int dp = d + delta; dp <= k; ++dp) v.row(dp).set(j + len);
            }
        }
    }
    return v;
}

VeryShortIndex::VeryShortIndex(const LceIndex& idx, const Frag& text, int cap_)
    : cap(std::min(cap_, text.len)),
      text_s(idx.frag_str(text)),
      text_r(text_s.rbegin(), text_s.rend()),
      st(text_s),
      st_r(text_r) {
    const int m = text.len;
    pref.resize(size_t(m) + 1);
    suf.resize(size_t(m) + 1);
    for (int j = 0; j <= m; ++j) {
        auto& row = pref[size_t(j)];
        row.push_back(st.id(st.root()));
        SuffixTree::Locus loc = st.root();
        for (int e = 1; e <= std::min(cap, m - j); ++e) {
            st.step(loc, (unsigned char)text_s[size_t(j + e - 1)]);
            row.push_back(st.id(loc));
        }
    }
    for (int end = 0; end <= m; ++end) {
        auto& row = suf[size_t(end)];
        row.push_back(st_r.id(st_r.root()));
        SuffixTree::Locus loc = st_r.root();
        for (int f = 1; f <= std::min(cap, end); ++f) {
            st_r.step(loc, (unsigned char)text_r[size_t(m - end + f - 1)]);
            row.push_back(st_r.id(loc));
        }
    }
}

BitMatrix ape_very_short(const ApeInstance& inst, int b_prime, const VeryShortIndex* pre) {
    if (inst.k != 1) throw std::invalid_argument("very-short solver requires budget 1");
    int max_len = 0;
    for (const Frag& p : inst.patterns) {
        if (p.len > b_prime) throw std::invalid_argument("pattern exceeds the very-short bound");
        max_len = std::max(max_len, p.len);
    }
    const int m = inst.text.len;
    BitMatrix v(2, m);
    const LceIndex& idx = *inst.idx;
    const int cap = std::min({b_prime, m, max_len});
    std::optional<VeryShortIndex> own;
    if (!pre || pre->cap < cap) {
        own.emplace(idx, inst.text, cap);
        pre = &*own;
    }
    const SuffixTree& st = pre->st;
    const SuffixTree& st_r = pre->st_r;
    const auto& pref = pre->pref;
    const auto& suf = pre->suf;

    // pattern ids: whole strings for the exact pass, split pairs for the
    // one-mismatch pass (prefix in the forward tree, suffix in the reversed)
    std::vector<uint64_t> exact_ids;
    std::map<int, std::vector<std::vector<std::pair<uint64_t, uint64_t>>>> splits;
    for (const Frag& pf : inst.patterns) {
        const std::string p = idx.frag_str(pf);
        const int len = int(p.size());
        std::vector<uint64_t> pid(size_t(len) + 1, 0), rid(size_t(len) + 1, 0);
        pid[0] = st.id(st.root());
        SuffixTree::Locus loc = st.root();
        for (int e = 1; e <= len; ++e) {
            if (!st.step(loc, (unsigned char)p[size_t(e - 1)])) break;
            pid[size_t(e)] = st.id(loc);
        }
        rid[0] = st_r.id(st_r.root());
        loc = st_r.root();
        for (int f = 1; f <= len; ++f) {
            if (!st_r.step(loc, (unsigned char)p[size_t(len - f)])) break;
            rid[size_t(f)] = st_r.id(loc);
        }
        if (pid[size_t(len)] != 0) exact_ids.push_back(pid[size_t(len)]);
        auto& sl = splits[len];
        if (sl.empty()) sl.resize(size_t(len));
        for (int e = 0; e < len; ++e) {
            const uint64_t a = pid[size_t(e)];
            const uint64_t b = rid[size_t(len - 1 - e)];
            if (a == 0 || b == 0) continue;
            sl[size_t(e)].emplace_back(a, b);
        }
    }
    std::sort(exact_ids.begin(), exact_ids.end());
    exact_ids.erase(std::unique(exact_ids.begin(), exact_ids.end()), exact_ids.end());
    for (auto& [len, sl] : splits)
        for (auto& vec : sl) {
            std::sort(vec.begin(), vec.end());
            vec.erase(std::unique(vec.begin(), vec.end()), vec.end());
        }

    for (int j = 0; j < m; ++j) {
        const bool u0 = inst.u.row(0).get(j);
        const bool u1 = inst.u.row(1).get(j);
        if (!u0 && !u1) continue;
        const auto& pj = pref[size_t(j)];
        const int top = std::min(cap, m - 1 - j);
        for (int l = 1; l <= top; ++l) {
            if (!std::binary_search(exact_ids.begin(), exact_ids.end(), pj[size_t(l)])) continue;
            if (u0) v.row(0).set(j + l);
            v.row(1).set(j + l);
        }
        if (!u0) continue;
        for (const auto& [len, sl] : splits) {
            if (len > top) break;
            const auto& se = suf[size_t(j + len)];
            for (int e = 0; e < len; ++e) {
                const auto& vec = sl[size_t(e)];
                if (vec.empty()) continue;
                const auto key = std::make_pair(pj[size_t(e)], se[size_t(len - 1 - e)]);
                if (std::binary_search(vec.begin(), vec.end(), key)) {
                    v.row(1).set(j + len);
                    break;
                }
            }
        }
    }
    return v;
}

BitMatrix ape_short(const ApeInstance& inst) {
    const int m = inst.text.len;
    const int k = inst.k;
    BitMatrix v(k + 1, m);
    const LceIndex& idx = *inst.idx;
    const std::string text = idx.frag_str(inst.text);
    SuffixTree st(text);

    std::vector<Decomposition> ds;
    std::vector<std::string> cand;
    for (const Frag& pf : inst.patterns) {
        std::string p = idx.frag_str(pf);
        auto d = decompose(st, p, k);
        if (!d) continue;
        ds.push_back(std::move(*d));
        cand.push_back(std::move(p));
    }
    if (cand.empty()) return v;
    std::vector<std::string> keep;
    std::set<int> lens;
    for (int i : dedup(ds)) {
        lens.insert(int(cand[size_t(i)].size()));
        keep.push_back(std::move(cand[size_t(i)]));
    }
    Errata es(text, std::move(keep), k);

    for (int j = 0; j < m; ++j) {
        bool active = false;
        for (int d = 0; d <= k && !active; ++d) active = inst.u.row(d).get(j);
        if (!active) continue;
        for (int len : lens) {
            if (j + len > m - 1) break;
            int dstar = -1;
            for (int bd = 0; bd <= k; ++bd)
                if (es.query_min_le(j, len, bd)) {
                    dstar = bd;
                    break;
                }
            if (dstar < 0) continue;
            for (int d = 0; d + dstar <= k; ++d) {
                if (!inst.u.row(d).get(j)) continue;
                for (int dp = d + dstar; dp <= k; ++dp) v.row(dp).set(j + len);
            }
        }
    }
    return v;
}

std::vector<RestrictedInstance> make_restricted(const ApeInstance& inst, int b_floor) {
    const int m = inst.text.len;
    const int k = inst.k;
    for (const Frag& p : inst.patterns)
        if (p.len < b_floor) throw std::invalid_argument("pattern below the long-case floor");

    std::map<int, std::pair<double, std::vector<Frag>>> buckets;
    for (const Frag& p : inst.patterns) {
        int i = 0;
        double x = 1.0;
        while (x * 1.1 <= double(p.len)) {
            x *= 1.1;
            ++i;
        }
        auto& bucket = buckets[i];
        bucket.first = x;
        bucket.second.push_back(p);
    }

    std::vector<RestrictedInstance> out;
    for (auto& [bi, bucket] : buckets) {
        (void)bi;
        const double ell = bucket.first;
        const int step = std::max(1, int(0.4 * ell));
        const int width = step + int(std::ceil(1.1 * ell));
        for (int js = 0;; js += step) {
            const int wlen = std::min(width, m - js);
            if (double(wlen) < ell) break;
            for (int din = 0; din <= k; ++din)
                for (int dout = din; dout <= k; ++dout) {
                    RestrictedInstance ri;
                    ri.idx = inst.idx;
                    ri.text = Frag{inst.text.member, inst.text.begin + js, wlen};
                    ri.window_offset = js;
                    ri.ell = ell;
                    ri.patterns = bucket.second;
                    ri.kappa = dout - din;
                    ri.d_in = din;
                    ri.d_out = dout;
                    Bits a(wlen);
                    for (int x = 0; x < wlen; ++x)
                        if (inst.u.row(din).get(js + x)) a.set(x);
                    ri.a = std::move(a);
                    out.push_back(std::move(ri));
                }
        }
    }
    return out;
}

namespace {

struct PeriPat {
    int pi = 0;
    int len = 0;
    int r = 0;
    int dp = 0;
    std::vector<int> mis;
    std::vector<int> exc;
    OccRep rep;
};

// earliest run of 2*qn positions free of pattern-model mismatches
int clean_block(const std::vector<int>& mis, int plen, int qn) {
    int prev = -1;
    for (int v : mis) {
        if (v - prev - 1 >= 2 * qn) return prev + 1;
        prev = v;
    }
    if (plen - prev - 1 >= 2 * qn) return prev + 1;
    return -1;
}

}  // namespace

Bits solve_restricted(const RestrictedInstance& ri, const ZRule& z, PeriodicFrame* frame) {
    const LceIndex& idx = *ri.idx;
    const int wlen = ri.text.len;
    const int kappa = ri.kappa;
    Bits out(wlen + 1);
    if (frame) *frame = PeriodicFrame{};

    struct Raw {
        int pi;
        OccRep rep;
    };
    std::vector<Raw> peri;
    for (int pi = 0; pi < int(ri.patterns.size()); ++pi) {
        const Frag& p = ri.patterns[size_t(pi)];
        if (p.len > wlen) continue;
        OccRep rep = analyze(idx, p, ri.text, kappa);
        if (rep.kind == OccRep::Kind::Explicit) {
            for (int x : rep.positions)
                if (ri.a.get(x)) out.set(x + p.len);
        } else {
            peri.push_back(Raw{pi, std::move(rep)});
        }
    }
    if (peri.empty()) return out;

    // trim to the span covered by periodic occurrences
    int alpha = wlen;
    int beta = 0;
    for (const Raw& pr : peri) {
        alpha = std::min(alpha, pr.rep.progressions.front().start);
        beta = std::max(beta,
                        pr.rep.progressions.back().back() + ri.patterns[size_t(pr.pi)].len);
    }
    const int tlen = beta - alpha;
    const Frag tw{ri.text.member, ri.text.begin + alpha, tlen};

    // rebase certificates to the trimmed origin and verify one period class
    const int qn = int(peri[0].rep.cert.q.size());
    std::vector<PeriPat> pats;
    std::string q_first;
    for (Raw& pr : peri) {
        const PeriodCert& cert = pr.rep.cert;
        if (int(cert.q.size()) != qn)
            throw InvariantError("periodic certificates disagree on period length");
        std::string qr = rotate_left(cert.q, alpha % qn);
        if (q_first.empty())
            q_first = qr;
        else if (!are_cyclic_equivalent(q_first, qr))
            throw InvariantError("periodic certificates are not cyclically equivalent");
        PeriPat pp;
        pp.pi = pr.pi;
        pp.len = ri.patterns[size_t(pr.pi)].len;
        pp.r = ((cert.r - alpha) % qn + qn) % qn;
        pp.rep = std::move(pr.rep);
        pats.push_back(std::move(pp));
    }

    // the first pattern holds an exact copy of every shift of its period;
    // try them in index order until one models the window within 6*kappa
    const Frag& pf0 = ri.patterns[size_t(pats[0].pi)];
    const int pos0 = clean_block(pats[0].rep.cert.pat_mismatches, pf0.len, qn);
    if (pos0 < 0) throw InvariantError("pattern lacks a clean period window");
    const int c0 = (pats[0].r + pos0) % qn;
    Frag qfrag{};
    std::vector<int> tau;
    bool found = false;
    for (int c = 0; c < qn && !found; ++c) {
        const int off = ((c - c0) % qn + qn) % qn;
        const Frag qc{pf0.member, pf0.begin + pos0 + off, qn};
        auto mis = periodic_mismatches(idx, tw, qc, 0, 6 * kappa);
        if (mis) {
            qfrag = qc;
            tau = std::move(*mis);
            found = true;
        }
    }
    if (!found) throw InvariantError("no cyclic shift of the period fits the window");

    const RegionPartition rp{tau, tlen};
    const int b = int(tau.size());

    // align every pattern to the common period and recompute its mismatches
    for (PeriPat& pp : pats) {
        const Frag& pf = ri.patterns[size_t(pp.pi)];
        const int pos = clean_block(pp.rep.cert.pat_mismatches, pf.len, qn);
        if (pos < 0) throw InvariantError("pattern lacks a clean period window");
        const Frag dbl{pf.member, pf.begin + pos, 2 * qn};
        auto occs = pillar_ipm(idx, qfrag, dbl);
        if (occs.empty())
            throw InvariantError("pattern period is not a shift of the common period");
        const int ci = (pp.r + pos) % qn;
        const int oi = (ci + occs.front().start) % qn;
        const int rbar = ((pp.r - oi) % qn + qn) % qn;
        if (rbar != pp.r)
            throw InvariantError("pattern model misaligned with the common period");
        auto mis = periodic_mismatches(idx, pf, qfrag, pp.r, pf.len);
        pp.mis = std::move(*mis);
        pp.dp = int(pp.mis.size());
        if (kappa == 0 ? pp.dp != 0 : pp.dp >= 2 * kappa)
            throw InvariantError("pattern drifts from the common period");
        pp.exc = exception_set(pp.mis, tau);
        if (int(pp.exc.size()) > 12 * kappa * kappa)
            throw InvariantError("exception set exceeds its bound");
    }

    // exceptional candidates: true occurrences decided by the occurrence set
    for (const PeriPat& pp : pats)
        for (int e : pp.exc) {
            if (e < 0 || e + pp.len > tlen) continue;
            if (!ri.a.get(e + alpha)) continue;
            if (!rep_contains(pp.rep, e + alpha)) continue;
            out.set(alpha + e + pp.len);
        }

    // aligned candidates: every one inside a region pair within budget is an
    // occurrence; large periods enumerate directly, small ones batch by
    // residue and extend with one sumset per group
    const int zv = (z ? z : ZRule(default_z))(int(pats.size()), ri.ell);
    if (qn > zv) {
        for (const PeriPat& pp : pats)
            for (int x = pp.r; x + pp.len <= tlen; x += qn) {
                if (!ri.a.get(x + alpha)) continue;
                const int s = rp.region_of(x);
                const int t = rp.region_of(x + pp.len);
                if (pp.dp + t - s <= kappa) out.set(alpha + x + pp.len);
            }
    } else {
        for (int s = 0; s <= b; ++s) {
            const int xs_lo = s == 0 ? 0 : tau[size_t(s - 1)] + 1;
            const int xs_hi = std::min(s == b ? tlen : tau[size_t(s)], tlen - 1);
            if (xs_lo > xs_hi) continue;
            for (int t = s; t <= b; ++t) {
                std::map<int, std::vector<int>> groups;
                for (const PeriPat& pp : pats)
                    if (pp.dp + t - s <= kappa) groups[pp.r].push_back(pp.len);
                if (groups.empty()) continue;
                const int e_lo = t == 0 ? 0 : tau[size_t(t - 1)] + 1;
                const int e_hi = t == b ? tlen : tau[size_t(t)];
                for (auto& [rr, lens] : groups) {
                    PosSet base(tlen);
                    const int x0 = xs_lo + ((rr - xs_lo) % qn + qn) % qn;
                    bool any = false;
                    for (int x = x0; x <= xs_hi; x += qn)
                        if (ri.a.get(x + alpha)) {
                            base.set(x);
                            any = true;
                        }
                    if (!any) continue;
                    std::sort(lens.begin(), lens.end());
                    lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
                    PosSet lset(lens.back() + 1);
                    for (int len : lens) lset.set(len);
                    const PosSet ss = sumset(base, lset);
                    const int hi = std::min(e_hi, ss.bound() - 1);
                    for (int e = std::max(e_lo, 0); e <= hi; ++e)
                        if (ss.get(e)) out.set(alpha + e);
                }
            }
        }
    }

    if (frame) {
        frame->q = idx.frag_str(qfrag);
        frame->alpha = alpha;
        frame->tlen = tlen;
        frame->tau = tau;
        for (const PeriPat& pp : pats)
            frame->pats.push_back(
                PeriodicFrame::Pat{pp.pi, pp.len, pp.r, pp.dp, pp.mis, pp.exc});
    }
    return out;
}

BitMatrix ape_long(const ApeInstance& inst, int b_floor, const ZRule& z) {
    const int m = inst.text.len;
    const int k = inst.k;
    BitMatrix v(k + 1, m);
    for (const RestrictedInstance& ri : make_restricted(inst, b_floor)) {
        const Bits row = solve_restricted(ri, z);
        for (int jp : row.ones()) {
            const int g = ri.window_offset + jp;
            if (g <= m - 1) v.row(ri.d_out).set(g);
        }
    }
    return v;
}

Bands dispatch_bands(int m, int k) {
    Bands bd;
    bd.short_hi = int(std::ceil(std::sqrt(double(m))));
    if (k == 1) {
        const double lg = std::log2(double(m));
        bd.very_short_hi = std::min(int(std::ceil(lg * lg)), bd.short_hi);
    }
    return bd;
}

BitMatrix ape_dispatch(const ApeInstance& inst, const VeryShortIndex* vs_pre) {
    const int m = inst.text.len;
    const int k = inst.k;
    const Bands bd = dispatch_bands(m, k);
    std::vector<Frag> very_short, shrt, lng;
    for (const Frag& p : inst.patterns) {
        if (k == 1 && p.len <= bd.very_short_hi)
            very_short.push_back(p);
        else if (p.len <= bd.short_hi)
            shrt.push_back(p);
        else
            lng.push_back(p);
    }
    BitMatrix v(k + 1, m);
    auto sub = [&](std::vector<Frag> ps) {
        return ApeInstance{inst.idx, inst.text, std::move(ps), k, inst.u};
    };
    if (!very_short.empty()) v.or_with(ape_very_short(sub(very_short), bd.very_short_hi, vs_pre));
    if (!shrt.empty()) v.or_with(ape_short(sub(shrt)));
    if (!lng.empty()) v.or_with(ape_long(sub(lng), bd.short_hi + 1));
    return v;
}

}  // namespace edsm
