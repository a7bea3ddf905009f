#pragma once

#include <map>
#include <optional>
#include <set>

#include "knottrace/complex.hpp"

namespace knottrace {

// Homology of the truncated surgery mapping cone, assembled at homology level
// from the edge maps: columns H(A_s) for s in [-b, b], rows H(B_t) for t in
// [-b+n, b], v into column t = s and h into t = s + n.  Over a field the cone
// of a map f has dim H = dim H(source) + dim H(target) - 2 rank f on homology,
// block by spin^c class.
struct ConeResult {
    int n = 0;
    int truncation = 0;  // the b actually used
    // n != 0: keys are residues 0..|n|-1.  n == 0: keys are the integers s
    // with nonzero rank (everything else is zero).
    std::map<int, int> spinc_ranks;
    int total_rank = 0;
    std::set<int> nonzero_inclusions;  // s with H(B_s) -> H(cone) nonzero
    std::optional<int> s_max;
};

// truncation_override must be at least genus + |n| + 2 when given.
ConeResult cone_ranks(const KnotComplex& c, int n,
                      std::optional<int> truncation_override = {});

// True when s lies in nonzero_inclusions of cone_ranks(c, n).  Requires
// |s| <= genus + |n| + 2; a wider query needs a wider truncation.
bool surgery_map_nonzero(const KnotComplex& c, int n, int s);

struct TraceProfile {
    int n = 0;
    std::optional<int> s_max;
    std::optional<int> s_prime_max;
};

// s_max of the n-cone together with s'_max of the (-n)-cone of the mirror.
TraceProfile trace_profile(const KnotComplex& c, int n,
                           std::optional<int> truncation_override = {});

}  // namespace knottrace
