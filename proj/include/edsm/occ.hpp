#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edsm/lce_index.hpp"

namespace edsm {

// periodic approximation of a pattern: p is within < 2*budget mismatches of
// q_inf[r .. r+|p|) where q_inf is q repeated forever
struct PeriodCert {
    std::string q;
    int r = 0;
    std::vector<int> pat_mismatches; // positions j with p[j] != q[(r+j) mod |q|]
};

// occurrence set of a pattern in a window, either listed or as progressions
struct OccRep {
    enum class Kind { Explicit, Periodic };
    Kind kind = Kind::Explicit;
    std::vector<int> positions; // Explicit only, sorted
    PeriodCert cert;            // Periodic only
    std::vector<Progression> progressions;

    std::vector<int> materialize() const;
};

// all x with delta_H(p, t[x .. x+|p|)) <= kappa, ascending
std::vector<int> occ_scan(const LceIndex& idx, const Frag& p, const Frag& t, int kappa);

// the length-q_len string minimizing mismatches against p when repeated
std::string majority_candidate(std::string_view p, int q_len);

// per-residue majority vote over candidate period lengths 1..|p|/(128*kappa),
// first length within 2*kappa-1 mismatches wins; r is always 0 here
std::optional<PeriodCert> extract_period(std::string_view p, int kappa);

// occurrence dichotomy: few occurrences are listed, dense ones must come from
// a periodic source and are returned as progressions congruent mod |q|
OccRep analyze(const LceIndex& idx, const Frag& p, const Frag& t, int kappa);

bool rep_contains(const OccRep& rep, int x);

} // namespace edsm
