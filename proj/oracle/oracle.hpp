#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edsm/eds.hpp" // data model only; no algorithm code is shared

namespace edsm::oracle {

// end positions of k-mismatch occurrences by direct state expansion, plus the
// per-symbol active-prefix tables (rows_after[i][d][j]) for stepping checks
struct NaiveRun {
    std::vector<int> ends;
    std::vector<std::vector<std::vector<uint8_t>>> rows_after;
};

NaiveRun edsm_naive_run(const std::string& pattern, const EDString& text, int k);
std::vector<int> edsm_naive(const std::string& pattern, const EDString& text, int k);

// { x : hamming(p, t[x..x+|p|)) <= kappa }
std::vector<int> occ_naive(const std::string& p, const std::string& t, int kappa);

// literal active-prefix extension: v[d'][j+|P|] for d' >= d + hamming
std::vector<std::vector<uint8_t>> ape_bruteforce(const std::string& text,
                                                 const std::vector<std::string>& patterns,
                                                 int k,
                                                 const std::vector<std::vector<uint8_t>>& u);

std::vector<int> sumset_naive(const std::vector<int>& x, const std::vector<int>& y);

} // namespace edsm::oracle
