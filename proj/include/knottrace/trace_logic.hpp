#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knottrace/surgery.hpp"

namespace knottrace {

// Whether the surgery cobordism map in the spin^c class labeled s is nonzero,
// predicted from (nu, epsilon) alone.  The Chern pairing is 2s - n; the map is
// nonzero iff |2s - n| < 2 nu - n, or |2s - n| = 2 nu - n with epsilon = 0 and
// n <= 0.
bool predicted_map_nonzero(int nu, int epsilon, int n, int s);

struct NuBounds {
    std::optional<int> lower;
    std::optional<int> upper;
};

// s_max <= nu <= s_max + 1 when defined; otherwise only the parity-dependent
// upper bound n/2 (n even) or (n+1)/2 (n odd).
NuBounds nu_bounds_from_smax(std::optional<int> s_max, int n);

struct InferenceOutcome {
    std::optional<int> nu;
    std::optional<int> abs_epsilon;
    std::vector<int> rows_applied;  // 1-based row numbers, in table order
};

// Evaluates every applicable row of the inference table and checks that the
// conclusions agree.  Rows, in order:
//   1  s_max != 0                      -> nu = s_max + 1, |eps| = 1
//   2  s_max defined, n > 0            -> nu = s_max + 1, |eps| = 1
//   3  s_max = 0, s'_max defined, n=0  -> nu = 0, |eps| = 0
//   4  s_max = 0, s'_max undef, n=0    -> nu = 1, |eps| = 1
//   5  s_max undef, s'_max = 0, n > 0  -> nu = 0
//   6  both undefined                  -> nu = (n+1)/2, |eps| = 1  (n odd)
//   7  s'_max != 0                     -> nu = -s'_max, |eps| = 1
//   8  s'_max defined, n < 0           -> nu = -s'_max, |eps| = 1
//   9  s_max = 0, s'_max undef, n < 0  -> nothing
InferenceOutcome infer_from_profile(const TraceProfile& p);

enum class TraceComparison { NotDiffeomorphic, Inconclusive };

struct CompareResult {
    TraceComparison verdict = TraceComparison::Inconclusive;
    InferenceOutcome inference_a;
    InferenceOutcome inference_b;
    std::string note;
};

// Two traces with the same framing are not diffeomorphic when both inferred nu
// values are determined and differ, outside the exceptional case n < 0 with
// {nu, nu'} = {0, 1}.
CompareResult compare_traces(const TraceProfile& a, const TraceProfile& b);

}  // namespace knottrace
