#include "knottrace/trace_logic.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "knottrace/errors.hpp"

namespace knottrace {

bool predicted_map_nonzero(int nu, int epsilon, int n, int s) {
    int pairing = 2 * s - n;
    int threshold = 2 * nu - n;
    if (std::abs(pairing) < threshold) return true;
    if (std::abs(pairing) == threshold && epsilon == 0 && n <= 0) return true;
    return false;
}

NuBounds nu_bounds_from_smax(std::optional<int> s_max, int n) {
    NuBounds out;
    if (!s_max) {
        // n even -> n/2, n odd -> (n+1)/2; both divisions are exact.
        out.upper = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
        return out;
    }
    out.lower = *s_max;
    out.upper = *s_max + 1;
    return out;
}

InferenceOutcome infer_from_profile(const TraceProfile& p) {
    struct Row {
        int id;
        std::optional<int> nu;
        std::optional<int> abs_epsilon;
    };
    std::vector<Row> rows;

    const auto& smax = p.s_max;
    const auto& sprime = p.s_prime_max;
    int n = p.n;

    if (smax && *smax != 0) rows.push_back({1, *smax + 1, 1});
    if (smax && n > 0) rows.push_back({2, *smax + 1, 1});
    if (smax && *smax == 0 && sprime && n == 0) rows.push_back({3, 0, 0});
    if (smax && *smax == 0 && !sprime && n == 0) rows.push_back({4, 1, 1});
    if (!smax && sprime && *sprime == 0 && n > 0) rows.push_back({5, 0, std::nullopt});
    if (!smax && !sprime) {
        if (n % 2 == 0)
            throw ConsistencyError(
                "no nontrivial maps on either trace with even framing " + std::to_string(n) +
                "; this case cannot arise");
        rows.push_back({6, (n + 1) / 2, 1});
    }
    if (sprime && *sprime != 0) rows.push_back({7, -*sprime, 1});
    if (sprime && n < 0) rows.push_back({8, -*sprime, 1});
    if (smax && *smax == 0 && !sprime && n < 0) rows.push_back({9, std::nullopt, std::nullopt});

    InferenceOutcome out;
    for (const auto& row : rows) {
        out.rows_applied.push_back(row.id);
        if (row.nu) {
            if (out.nu && *out.nu != *row.nu)
                throw ConsistencyError("inference rows disagree on nu: " +
                                       std::to_string(*out.nu) + " vs " +
                                       std::to_string(*row.nu) + " (row " +
                                       std::to_string(row.id) + ")");
            out.nu = row.nu;
        }
        if (row.abs_epsilon) {
            if (out.abs_epsilon && *out.abs_epsilon != *row.abs_epsilon)
                throw ConsistencyError("inference rows disagree on |epsilon| (row " +
                                       std::to_string(row.id) + ")");
            out.abs_epsilon = row.abs_epsilon;
        }
    }
    return out;
}

CompareResult compare_traces(const TraceProfile& a, const TraceProfile& b) {
    if (a.n != b.n)
        throw std::invalid_argument("framing mismatch: " + std::to_string(a.n) + " vs " +
                                    std::to_string(b.n));
    CompareResult out;
    out.inference_a = infer_from_profile(a);
    out.inference_b = infer_from_profile(b);
    if (!out.inference_a.nu || !out.inference_b.nu) {
        out.note = "nu undetermined for at least one trace";
        return out;
    }
    int na = *out.inference_a.nu;
    int nb = *out.inference_b.nu;
    if (na == nb) {
        out.note = "inferred nu values agree";
        return out;
    }
    bool exceptional = a.n < 0 && std::min(na, nb) == 0 && std::max(na, nb) == 1;
    if (exceptional) {
        out.note = "negative framing with {nu, nu'} = {0, 1}: exceptional case";
        return out;
    }
    out.verdict = TraceComparison::NotDiffeomorphic;
    out.note = "inferred nu values differ: " + std::to_string(na) + " vs " + std::to_string(nb);
    return out;
}

}  // namespace knottrace
