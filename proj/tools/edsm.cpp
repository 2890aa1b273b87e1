#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "edsm/eds.hpp"
#include "edsm/engine.hpp"
#include "oracle.hpp"

namespace {

using edsm::Algo;
using edsm::EDString;
using edsm::GenParams;
using edsm::Symbol;

std::string strip_trailing_newlines(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

double wall_ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string random_string(std::mt19937_64& rng, int len, const std::string& sigma) {
    std::string s;
    for (int i = 0; i < len; ++i) s.push_back(sigma[rng() % sigma.size()]);
    return s;
}

std::string repeat_to(const std::string& q, int len) {
    std::string s;
    while (int(s.size()) < len) s += q;
    s.resize(size_t(len));
    return s;
}

int cmd_match(const std::string& eds_path, const std::string& pattern_arg,
              const std::string& pattern_path, int k, const std::string& algo_arg,
              bool as_json) {
    std::string eds_text;
    if (!read_file(eds_path, eds_text)) {
        std::cerr << "cannot read " << eds_path << "\n";
        return 2;
    }
    std::string pattern = pattern_arg;
    if (!pattern_path.empty()) {
        if (!read_file(pattern_path, pattern)) {
            std::cerr << "cannot read " << pattern_path << "\n";
            return 2;
        }
    }
    pattern = strip_trailing_newlines(pattern);
    EDString eds;
    try {
        eds = edsm::parse_eds(strip_trailing_newlines(eds_text));
    } catch (const edsm::ParseError& e) {
        std::cerr << "bad eds file: " << e.what() << "\n";
        return 2;
    }
    if (pattern.empty()) {
        std::cerr << "pattern must be nonempty\n";
        return 2;
    }
    Algo algo = algo_arg == "naive" ? Algo::NaiveApe : Algo::FastApe;
    const auto t0 = std::chrono::steady_clock::now();
    edsm::MatchReport report = edsm::run(pattern, eds, k, algo);
    const double ms = wall_ms_since(t0);
    if (as_json) {
        nlohmann::ordered_json j;
        j["n"] = eds.length();
        j["N"] = eds.size_total();
        j["c"] = eds.cardinality();
        j["k"] = k;
        j["algo"] = algo == Algo::NaiveApe ? "naive" : "fast";
        j["positions"] = report.end_positions;
        j["wall_ms"] = ms;
        std::cout << j.dump() << "\n";
    } else {
        for (int pos : report.end_positions) std::cout << pos << "\n";
    }
    return 0;
}

int cmd_gen(const GenParams& gp, const std::string& out_path) {
    EDString eds;
    try {
        eds = edsm::generate(gp);
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad generator parameters: " << e.what() << "\n";
        return 2;
    }
    std::string text = edsm::render_eds(eds) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return 0;
}

struct Divergence {
    std::vector<int> fast, naive, reference;
    bool found = false;
};

Divergence divergence_of(const std::string& pattern, const EDString& eds, int k) {
    Divergence d;
    d.fast = edsm::run(pattern, eds, k, Algo::FastApe).end_positions;
    d.naive = edsm::run(pattern, eds, k, Algo::NaiveApe).end_positions;
    d.reference = edsm::oracle::edsm_naive(pattern, eds, k);
    d.found = d.fast != d.reference || d.naive != d.reference;
    return d;
}

EDString shrink(const std::string& pattern, EDString eds, int k) {
    bool improved = true;
    while (improved) {
        improved = false;
        for (size_t i = 0; i < eds.symbols.size(); ++i) {
            EDString cand = eds;
            cand.symbols.erase(cand.symbols.begin() + long(i));
            if (divergence_of(pattern, cand, k).found) {
                eds = std::move(cand);
                improved = true;
                break;
            }
        }
        if (improved) continue;
        for (size_t i = 0; i < eds.symbols.size() && !improved; ++i) {
            const Symbol& sym = eds.symbols[i];
            for (size_t a = 0; a < sym.alternatives.size(); ++a) {
                if (sym.alternatives.size() == 1 && !sym.has_epsilon) continue;
                EDString cand = eds;
                cand.symbols[i].alternatives.erase(cand.symbols[i].alternatives.begin() +
                                                   long(a));
                if (divergence_of(pattern, cand, k).found) {
                    eds = std::move(cand);
                    improved = true;
                    break;
                }
            }
        }
    }
    return eds;
}

int cmd_selftest(int cases, uint64_t seed, int k_max) {
    std::mt19937_64 rng(seed);
    const std::string sigma = "ACGT";
    for (int c = 0; c < cases; ++c) {
        GenParams gp;
        gp.seed = rng();
        gp.n = 1 + int(rng() % 12);
        gp.max_alts = 1 + int(rng() % 3);
        gp.max_len = 1 + int(rng() % 6);
        gp.eps_prob = 0.15;
        EDString eds = edsm::generate(gp);
        int k = int(rng() % size_t(k_max + 1));
        int m = 1 + int(rng() % 24);
        std::string pattern;
        if (rng() % 2 == 0) {
            pattern = random_string(rng, m, sigma);
        } else {
            std::string spelled;
            for (const Symbol& s : eds.symbols) {
                size_t pick = rng() % (s.alternatives.size() + (s.has_epsilon ? 1 : 0));
                if (pick < s.alternatives.size()) spelled += s.alternatives[pick];
            }
            if (spelled.empty()) spelled = random_string(rng, m, sigma);
            int len = std::min<int>(m, int(spelled.size()));
            int at = int(rng() % (spelled.size() - size_t(len) + 1));
            pattern = spelled.substr(size_t(at), size_t(len));
            for (int t = int(rng() % size_t(k + 1)); t > 0; --t)
                pattern[rng() % pattern.size()] = sigma[rng() % sigma.size()];
        }
        Divergence d = divergence_of(pattern, eds, k);
        if (!d.found) continue;

        EDString small = shrink(pattern, eds, k);
        Divergence ds = divergence_of(pattern, small, k);
        auto line = [](const std::vector<int>& v) {
            std::string s;
            for (int x : v) s += std::to_string(x) + " ";
            return s;
        };
        std::cout << "divergence at case " << c << " (seed " << seed << ")\n";
        std::cout << "eds: " << edsm::render_eds(small) << "\n";
        std::cout << "pattern: " << pattern << "\n";
        std::cout << "k: " << k << "\n";
        std::cout << "fast:      " << line(ds.fast) << "\n";
        std::cout << "naive:     " << line(ds.naive) << "\n";
        std::cout << "reference: " << line(ds.reference) << "\n";
        return 1;
    }
    std::cout << "selftest: " << cases << " cases ok\n";
    return 0;
}

EDString bench_eds(std::mt19937_64& rng, int n, int m) {
    const std::string base = repeat_to("ab", 2 * m);
    EDString eds;
    for (int i = 0; i < n; ++i) {
        Symbol s;
        for (int a = 0; a < 6; ++a) {
            int llen = m / 2 + int(rng() % size_t(std::max(1, m / 16)));
            int at = int(rng() % (base.size() - size_t(llen) + 1));
            std::string longer = base.substr(size_t(at), size_t(llen));
            longer[rng() % longer.size()] = 'c';
            s.alternatives.push_back(std::move(longer));
        }
        int slen = 3 + int(rng() % 8);
        int sat = int(rng() % (base.size() - size_t(slen) + 1));
        s.alternatives.push_back(base.substr(size_t(sat), size_t(slen)));
        s.normalize();
        eds.symbols.push_back(std::move(s));
    }
    return eds;
}

int cmd_bench(const std::string& m_list, int n, int k, int repeats,
              const std::string& csv_path) {
    std::vector<int> ms;
    {
        std::stringstream ss(m_list);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                int v = std::stoi(tok);
                if (v < 4) throw std::invalid_argument("too small");
                ms.push_back(v);
            } catch (const std::exception&) {
                std::cerr << "bad m-list entry: " << tok << "\n";
                return 2;
            }
        }
    }
    if (ms.empty()) {
        std::cerr << "empty m-list\n";
        return 2;
    }
    std::ostringstream csv;
    csv << "m,n,k,algo,wall_ms\n";
    std::map<int, double> fast_stage_ms;
    for (int m : ms) {
        std::mt19937_64 rng(uint64_t(m) * 7919 + 17);
        EDString eds = bench_eds(rng, n, m);
        std::string pattern = repeat_to("ab", m);
        for (auto algo : {Algo::NaiveApe, Algo::FastApe}) {
            double stage_total = 0.0;
            for (int r = 0; r < repeats; ++r) {
                edsm::RunStats stats;
                const auto t0 = std::chrono::steady_clock::now();
                edsm::run(pattern, eds, k, algo, &stats);
                const double ms_run = wall_ms_since(t0);
                csv << m << "," << n << "," << k << ","
                    << (algo == Algo::NaiveApe ? "naive" : "fast") << "," << ms_run << "\n";
                stage_total += stats.ape_ms;
            }
            if (algo == Algo::FastApe) fast_stage_ms[m] = stage_total / repeats;
        }
    }
    if (csv_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << csv_path << "\n";
            return 2;
        }
        out << csv.str();
    }
    // least-squares slope of log2(stage time) against log2(m)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (auto& [m, t] : fast_stage_ms) {
        if (t <= 0) continue;
        double x = std::log2(double(m)), y = std::log2(t);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    if (cnt >= 2) {
        double slope = (double(cnt) * sxy - sx * sy) / (double(cnt) * sxx - sx * sx);
        std::printf("fast ape stage log-log slope: %.3f\n", slope);
    } else {
        std::printf("fast ape stage log-log slope: n/a\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elastic-degenerate string matching with mismatches"};
    app.require_subcommand(1);

    auto* match = app.add_subcommand("match", "report end positions of occurrences");
    std::string eds_path, pattern_arg, pattern_path, algo_arg = "auto";
    int k = 0;
    bool as_json = false;
    match->add_option("--eds", eds_path, "eds text file")->required();
    auto* popt = match->add_option("--pattern", pattern_arg, "pattern string");
    match->add_option("--pattern-file", pattern_path, "pattern file")->excludes(popt);
    match->add_option("--k", k, "mismatch budget")->required()->check(CLI::Range(0, 8));
    match->add_option("--algo", algo_arg, "auto|naive|fast")
        ->check(CLI::IsMember({"auto", "naive", "fast"}));
    match->add_flag("--json", as_json, "json output");

    auto* gen = app.add_subcommand("gen", "write a random eds text");
    GenParams gp;
    std::string out_path;
    gen->add_option("--seed", gp.seed, "rng seed");
    gen->add_option("--n", gp.n, "symbol count")->check(CLI::PositiveNumber);
    gen->add_option("--max-alts", gp.max_alts, "alternatives per symbol")
        ->check(CLI::PositiveNumber);
    gen->add_option("--max-len", gp.max_len, "alternative length")->check(CLI::PositiveNumber);
    gen->add_option("--alphabet", gp.alphabet, "alphabet characters");
    gen->add_option("--eps-prob", gp.eps_prob, "empty-alternative probability")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--out", out_path, "output file (stdout when absent)");

    auto* selftest = app.add_subcommand("selftest", "randomized equivalence suite");
    int cases = 500, k_max = 2;
    uint64_t seed = 1;
    selftest->add_option("--cases", cases, "instance count")->check(CLI::PositiveNumber);
    selftest->add_option("--seed", seed, "rng seed");
    selftest->add_option("--k-max", k_max, "largest budget")->check(CLI::Range(0, 8));

    auto* bench = app.add_subcommand("bench", "timing comparison across pattern lengths");
    std::string m_list = "256,512,1024,2048,4096,8192", csv_path;
    int bn = 64, bk = 1, repeats = 3;
    bench->add_option("--m-list", m_list, "comma separated pattern lengths");
    bench->add_option("--n", bn, "symbol count")->check(CLI::PositiveNumber);
    bench->add_option("--k", bk, "mismatch budget")->check(CLI::Range(0, 8));
    bench->add_option("--repeats", repeats, "runs per cell")->check(CLI::PositiveNumber);
    bench->add_option("--csv", csv_path, "csv output file (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (match->parsed()) {
        if (pattern_arg.empty() && pattern_path.empty()) {
            std::cerr << "one of --pattern or --pattern-file is required\n";
            return 2;
        }
        return cmd_match(eds_path, pattern_arg, pattern_path, k, algo_arg, as_json);
    }
    if (gen->parsed()) return cmd_gen(gp, out_path);
    if (selftest->parsed()) return cmd_selftest(cases, seed, k_max);
    if (bench->parsed()) return cmd_bench(m_list, bn, bk, repeats, csv_path);
    return 2;
}
