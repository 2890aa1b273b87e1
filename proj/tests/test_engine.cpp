#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "edsm/engine.hpp"
#include "oracle.hpp"

using namespace edsm;

namespace {

std::string random_string(std::mt19937_64& rng, int len, const std::string& sigma) {
    std::string s;
    for (int i = 0; i < len; ++i) s.push_back(sigma[rng() % sigma.size()]);
    return s;
}

// a pattern sampled from the language keeps positive cases frequent
std::string language_sample(std::mt19937_64& rng, const EDString& eds, int want, int k,
                            const std::string& sigma) {
    std::string spelled;
    for (const Symbol& s : eds.symbols) {
        size_t pick = rng() % (s.alternatives.size() + (s.has_epsilon ? 1 : 0));
        if (pick < s.alternatives.size()) spelled += s.alternatives[pick];
    }
    if (spelled.empty()) return random_string(rng, want, sigma);
    int len = std::min<int>(want, int(spelled.size()));
    int at = int(rng() % (spelled.size() - size_t(len) + 1));
    std::string p = spelled.substr(size_t(at), size_t(len));
    for (int t = int(rng() % size_t(k + 1)); t > 0; --t)
        p[rng() % p.size()] = sigma[rng() % sigma.size()];
    return p;
}

std::vector<std::vector<uint8_t>> to_rows(const BitMatrix& b) {
    std::vector<std::vector<uint8_t>> out(size_t(b.rows),
                                          std::vector<uint8_t>(size_t(b.cols), 0));
    for (int d = 0; d < b.rows; ++d)
        for (int j = 0; j < b.cols; ++j)
            if (b.row(d).get(j)) out[size_t(d)][size_t(j)] = 1;
    return out;
}

}  // namespace

TEST_CASE("full occurrences inside one alternative") {
    EDString e = parse_eds("{xABCy}");
    EngineState st("ABC", e, 0, Algo::NaiveApe);
    CHECK(scan_symbol_full(st, 0));

    EDString e2 = parse_eds("{AB}");
    EngineState st2("ABC", e2, 0, Algo::NaiveApe);
    CHECK_FALSE(scan_symbol_full(st2, 0));

    EDString e3 = parse_eds("{xADCy}");
    EngineState st3("ABC", e3, 1, Algo::NaiveApe);
    CHECK(scan_symbol_full(st3, 0));
    EngineState st4("ABC", e3, 0, Algo::NaiveApe);
    CHECK_FALSE(scan_symbol_full(st4, 0));
}

TEST_CASE("prefix rows from symbol suffixes") {
    EDString e = parse_eds("{BC}");
    EngineState st("BCD", e, 0, Algo::NaiveApe);
    BitMatrix rows = prefixes_within_symbol(st, 0);
    CHECK(rows.row(0).get(2));
    CHECK(rows.row(0).count() == 1);

    EDString e2 = parse_eds("{XC}");
    EngineState st2("BCD", e2, 1, Algo::NaiveApe);
    BitMatrix rows2 = prefixes_within_symbol(st2, 0);
    CHECK_FALSE(rows2.row(0).get(2));
    CHECK(rows2.row(1).get(2));

    // a full-length match is not a prefix row: it is reported instead
    EDString e3 = parse_eds("{BCD}");
    EngineState st3("BCD", e3, 0, Algo::NaiveApe);
    BitMatrix rows3 = prefixes_within_symbol(st3, 0);
    CHECK(rows3.row(0).count() == 0);
}

TEST_CASE("boundary completion from active rows") {
    EDString e = parse_eds("{CDxx}");
    EngineState st("ABCD", e, 0, Algo::NaiveApe);
    st.b.row(0).set(2);
    CHECK(report_boundary(st, 0));

    EDString e2 = parse_eds("{CXxx}");
    EngineState st2("ABCD", e2, 1, Algo::NaiveApe);
    st2.b.row(1).set(2);
    CHECK_FALSE(report_boundary(st2, 0));
    EngineState st3("ABCD", e2, 1, Algo::NaiveApe);
    st3.b.row(0).set(2);
    CHECK(report_boundary(st3, 0));
}

TEST_CASE("stepping propagates active prefixes") {
    EDString e = parse_eds("{AB}{C}");
    EngineState st("ABCX", e, 0, Algo::NaiveApe);
    step(st, 0);
    CHECK(st.b.row(0).get(0));
    CHECK(st.b.row(0).get(2));
    CHECK(st.b.row(0).count() == 2);
    step(st, 1);
    CHECK(st.b.row(0).get(3));
    CHECK(st.b.row(0).count() == 2);

    // a skippable symbol carries rows over
    EDString e2 = parse_eds("{AB}{Z,}");
    EngineState s2("ABCX", e2, 0, Algo::NaiveApe);
    step(s2, 0);
    step(s2, 1);
    CHECK(s2.b.row(0).get(2));
}

TEST_CASE("end-to-end frozen examples") {
    EDString e = parse_eds("{AB}{C,X}{BA}");
    CHECK(run("ABCB", e, 1, Algo::FastApe).end_positions == std::vector<int>{2});
    CHECK(run("ABCB", e, 1, Algo::NaiveApe).end_positions == std::vector<int>{2});

    EDString e2 = parse_eds("{AB}{C,}{BA}");
    CHECK(run("ABBA", e2, 0, Algo::FastApe).end_positions == std::vector<int>{2});
    CHECK(run("ABBA", e2, 0, Algo::NaiveApe).end_positions == std::vector<int>{2});

    CHECK(run("AAAAAAAAAA", e, 1).end_positions.empty());
    CHECK_THROWS_AS(run("", e, 1), std::invalid_argument);
}

TEST_CASE("row semantics match the reference after every symbol") {
    std::mt19937_64 rng(771155);
    const std::string sigma = "ACGT";
    for (int it = 0; it < 200; ++it) {
        GenParams gp;
        gp.seed = rng();
        gp.n = 1 + int(rng() % 8);
        gp.max_alts = 1 + int(rng() % 3);
        gp.max_len = 1 + int(rng() % 6);
        gp.eps_prob = 0.2;
        EDString eds = generate(gp);
        int k = int(rng() % 3);
        int m = 1 + int(rng() % 16);
        std::string p = rng() % 2 == 0 ? random_string(rng, m, sigma)
                                       : language_sample(rng, eds, m, k, sigma);
        oracle::NaiveRun ref = oracle::edsm_naive_run(p, eds, k);
        EngineState st(p, eds, k, it % 2 == 0 ? Algo::FastApe : Algo::NaiveApe);
        for (int i = 0; i < eds.length(); ++i) {
            step(st, i);
            CHECK(to_rows(st.b) == ref.rows_after[size_t(i)]);
        }
    }
}

TEST_CASE("both drivers agree with the reference end to end") {
    std::mt19937_64 rng(424242);
    const std::string sigma = "ACGT";
    for (int it = 0; it < 300; ++it) {
        GenParams gp;
        gp.seed = rng();
        gp.n = 1 + int(rng() % 12);
        gp.max_alts = 1 + int(rng() % 3);
        gp.max_len = 1 + int(rng() % 6);
        gp.eps_prob = 0.15;
        EDString eds = generate(gp);
        int k = int(rng() % 3);
        int m = 1 + int(rng() % 24);
        std::string p = rng() % 2 == 0 ? random_string(rng, m, sigma)
                                       : language_sample(rng, eds, m, k, sigma);
        std::vector<int> want = oracle::edsm_naive(p, eds, k);
        RunStats stats;
        CHECK(run(p, eds, k, Algo::FastApe, &stats).end_positions == want);
        CHECK(run(p, eds, k, Algo::NaiveApe).end_positions == want);
        long long with_alts = 0;
        for (const Symbol& s : eds.symbols)
            if (!s.alternatives.empty()) ++with_alts;
        CHECK(stats.ape_calls == with_alts);
    }
}
