#include "edsm/eds.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

namespace edsm {

namespace {

bool word_byte(char c) {
    return std::isalnum((unsigned char)c);
}

} // namespace

void Symbol::normalize() {
    std::sort(alternatives.begin(), alternatives.end());
    alternatives.erase(std::unique(alternatives.begin(), alternatives.end()),
                       alternatives.end());
}

long long EDString::size_total() const {
    long long n = 0;
    for (const auto& s : symbols) {
        for (const auto& a : s.alternatives) n += (long long)a.size();
        if (s.has_epsilon) n += 1;
    }
    return n;
}

long long EDString::cardinality() const {
    long long c = 0;
    for (const auto& s : symbols)
        c += (long long)s.alternatives.size() + (s.has_epsilon ? 1 : 0);
    return c;
}

EDString parse_eds(std::string_view text) {
    EDString out;
    size_t i = 0;
    if (text.empty()) throw ParseError("empty text", 0);
    while (i < text.size()) {
        if (text[i] == '{') {
            size_t seg = i;
            ++i;
            Symbol sym;
            std::string cur;
            bool saw_eps = false;
            for (;;) {
                if (i >= text.size()) throw ParseError("unclosed '{'", seg);
                char c = text[i];
                if (c == ',' || c == '}') {
                    if (cur.empty())
                        saw_eps = true;
                    else
                        sym.alternatives.push_back(std::move(cur));
                    cur.clear();
                    ++i;
                    if (c == '}') break;
                } else if (word_byte(c)) {
                    cur.push_back(c);
                    ++i;
                } else {
                    throw ParseError("illegal byte in segment", i);
                }
            }
            sym.has_epsilon = saw_eps;
            sym.normalize();
            if (sym.alternatives.empty())
                throw ParseError("segment has no nonempty alternative", seg);
            out.symbols.push_back(std::move(sym));
        } else if (word_byte(text[i])) {
            std::string run;
            while (i < text.size() && word_byte(text[i])) run.push_back(text[i++]);
            Symbol sym;
            sym.alternatives.push_back(std::move(run));
            out.symbols.push_back(std::move(sym));
        } else {
            throw ParseError("illegal byte", i);
        }
    }
    return out;
}

std::string render_eds(const EDString& e) {
    std::string out;
    bool prev_plain = false;
    for (const auto& s : e.symbols) {
        bool plain = s.alternatives.size() == 1 && !s.has_epsilon && !prev_plain;
        if (plain) {
            out += s.alternatives[0];
        } else {
            out += '{';
            for (size_t i = 0; i < s.alternatives.size(); ++i) {
                if (i) out += ',';
                out += s.alternatives[i];
            }
            if (s.has_epsilon) out += ',';
            out += '}';
        }
        prev_plain = plain;
    }
    return out;
}

EDString generate(const GenParams& p) {
    if (p.n < 1) throw std::invalid_argument("generate: n must be >= 1");
    if (p.max_alts < 1) throw std::invalid_argument("generate: max_alts must be >= 1");
    if (p.max_len < 1) throw std::invalid_argument("generate: max_len must be >= 1");
    if (p.alphabet.empty()) throw std::invalid_argument("generate: empty alphabet");
    for (char c : p.alphabet)
        if (!word_byte(c)) throw std::invalid_argument("generate: alphabet must be alphanumeric");
    if (p.eps_prob < 0.0 || p.eps_prob >= 1.0)
        throw std::invalid_argument("generate: eps_prob must be in [0,1)");

    std::mt19937_64 rng(p.seed);
    auto draw = [&](uint64_t bound) { return int(rng() % bound); };

    EDString out;
    for (int s = 0; s < p.n; ++s) {
        Symbol sym;
        int alts = 1 + draw(uint64_t(p.max_alts));
        std::set<std::string> seen;
        for (int a = 0; a < alts; ++a) {
            int len = 1 + draw(uint64_t(p.max_len));
            std::string alt;
            for (int i = 0; i < len; ++i) alt.push_back(p.alphabet[draw(p.alphabet.size())]);
            seen.insert(std::move(alt));
        }
        sym.alternatives.assign(seen.begin(), seen.end());
        sym.has_epsilon = uint64_t(draw(1u << 20)) < uint64_t(p.eps_prob * double(1u << 20));
        out.symbols.push_back(std::move(sym));
    }
    return out;
}

} // namespace edsm
