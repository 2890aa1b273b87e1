#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edsm {

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// one degenerate symbol: a set of nonempty alternatives plus an optional
// empty-string member kept as a flag; alternatives stay sorted and unique
struct Symbol {
    std::vector<std::string> alternatives;
    bool has_epsilon = false;

    void normalize();
    bool operator==(const Symbol& o) const {
        return alternatives == o.alternatives && has_epsilon == o.has_epsilon;
    }
};

struct EDString {
    std::vector<Symbol> symbols;

    int length() const { return int(symbols.size()); } // n
    long long size_total() const;                      // N: bytes, epsilon counts 1
    long long cardinality() const;                     // c: alternatives, epsilon counts 1

    bool operator==(const EDString& o) const { return symbols == o.symbols; }
};

struct MatchReport {
    std::vector<int> end_positions; // sorted symbol indices
};

// grammar: sequence of segments; a segment is either a plain alphanumeric run
// (one singleton symbol) or {alt,alt,...} with possibly-empty alphanumeric
// alternatives; a symbol reducing to {} or just the empty string is an error
EDString parse_eds(std::string_view text);

// canonical form: alternatives sorted, epsilon rendered as a trailing empty
// alternative, singletons rendered plain unless that would merge with the
// previous plain run; parse(render(e)) == e
std::string render_eds(const EDString& e);

struct GenParams {
    uint64_t seed = 1;
    int n = 1;
    int max_alts = 1;
    int max_len = 1;
    std::string alphabet = "ACGT";
    double eps_prob = 0.0;
};

// deterministic for a fixed parameter set; throws std::invalid_argument on
// parameter-domain violations
EDString generate(const GenParams& p);

} // namespace edsm
