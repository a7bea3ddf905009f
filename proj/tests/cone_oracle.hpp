#pragma once

#include <map>
#include <set>

#include "knottrace/complex.hpp"

namespace knottrace::oracle {

// Test-side oracle: assembles the truncated surgery cone as an explicit chain
// complex and reads ranks and inclusion classes off the full boundary matrix,
// with no homology-level shortcut.  The horizontal map is composed with an
// explicitly constructed quasi-isomorphism {j=s} -> B, so the assembled cone
// has the same homology-level blocks as the real one.
struct ChainConeResult {
    std::map<int, int> spinc_ranks;  // same labeling as ConeResult
    int total_rank = 0;
    std::set<int> nonzero_inclusions;
};

ChainConeResult chain_cone(const KnotComplex& c, int n, int b);

}  // namespace knottrace::oracle
