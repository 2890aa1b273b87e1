#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edsm/ape.hpp"
#include "edsm/eds.hpp"
#include "edsm/lce_index.hpp"

namespace edsm {

enum class Algo { NaiveApe, FastApe };

struct RunStats {
    double ape_ms = 0.0;
    long long ape_calls = 0;
};

// left-to-right sweep state: after consuming symbols 0..i, row d holds the
// pattern prefix lengths that end a d-approximate suffix of some element of
// the language so far; row bit 0 (the empty prefix) is always on
struct EngineState {
    const EDString* eds = nullptr;
    LceIndex idx;  // member 0 is the pattern, then all alternatives in order
    int m = 0;
    int k = 0;
    Algo algo = Algo::FastApe;
    BitMatrix b;
    std::vector<std::vector<int>> member_of;  // symbol -> alternative -> member
    // pattern-side structures of the budget-1 solver, shared across all steps
    std::optional<VeryShortIndex> vs_cache;

    EngineState(const std::string& pattern, const EDString& text, int k, Algo algo);
};

// true if some alternative of the symbol contains a full pattern occurrence
bool scan_symbol_full(const EngineState& st, int symbol);

// pattern prefixes ending at the symbol boundary as suffixes of one
// alternative, capped at length m-1
BitMatrix prefixes_within_symbol(const EngineState& st, int symbol);

// true if some active prefix completes to a full occurrence inside a prefix
// of one alternative of the symbol
bool report_boundary(const EngineState& st, int symbol);

// advance the state across one symbol: prefix contributions, extension of the
// current rows through the nonempty alternatives, and carry-over when the
// symbol can be skipped via its empty alternative
void step(EngineState& st, int symbol, RunStats* stats = nullptr);

MatchReport run(const std::string& pattern, const EDString& text, int k,
                Algo algo = Algo::FastApe, RunStats* stats = nullptr);

}  // namespace edsm
