#include "knottrace/invariants.hpp"

#include <string>

#include "knottrace/f2.hpp"
#include "knottrace/hook.hpp"

namespace knottrace {

int tau(const KnotComplex& c) {
    HookComplex b = subquotient(c, HookKind::B);
    F2ColMatrix db(b.size());
    std::vector<F2Vec> cols(b.size(), F2Vec(b.size()));
    for (const auto& [f, t] : b.arrows) cols[f].flip(t);
    for (auto& col : cols) db.add_col(std::move(col));

    F2Reducer boundaries;
    for (const auto& col : db.cols) boundaries.insert(col);

    int g = c.genus();
    for (int s = -g - 1; s <= g + 1; ++s) {
        // The sublevel set is a subcomplex: arrows in B never raise A.
        F2ColMatrix restricted(b.size());
        std::vector<int> members;
        for (int k = 0; k < b.size(); ++k) {
            if (c.generator(k).alexander <= s) {
                restricted.add_col(db.cols[k]);
                members.push_back(k);
            }
        }
        for (const auto& z : null_space(restricted)) {
            F2Vec cycle(b.size());
            for (int k = 0; k < restricted.source_dim(); ++k)
                if (z.get(k)) cycle.flip(members[k]);
            if (!boundaries.in_span(cycle)) return s;
        }
    }
    throw ConsistencyError("no sublevel of B generates H(B) within the genus window of " +
                           c.name());
}

int nu(const KnotComplex& c) {
    int g = c.genus();
    for (int s = -g - 1; s <= g + 1; ++s) {
        if (edge_maps(c, s).v_nonzero()) return s;
    }
    throw ConsistencyError("no surjective v_s within the genus window of " + c.name());
}

int epsilon(const KnotComplex& c) {
    KnotComplex m = c.mirrored();
    int gap = nu(c) - tau(c);
    int gap_mirror = nu(m) - tau(m);
    if (gap == 1 && gap_mirror == 0) return -1;
    if (gap == 0 && gap_mirror == 0) return 0;
    if (gap == 0 && gap_mirror == 1) return 1;
    throw ConsistencyError("epsilon case split is not exhaustive for " + c.name() + " (gap " +
                           std::to_string(gap) + ", mirror gap " + std::to_string(gap_mirror) +
                           "); invalid complex or dualization defect");
}

InvariantBundle bundle(const KnotComplex& c) {
    KnotComplex m = c.mirrored();
    InvariantBundle out;
    out.tau = tau(c);
    out.nu = nu(c);
    out.genus = c.genus();
    out.tau_mirror = tau(m);
    out.nu_mirror = nu(m);

    int gap = out.nu - out.tau;
    int gap_mirror = out.nu_mirror - out.tau_mirror;
    if (gap == 1 && gap_mirror == 0)
        out.epsilon = -1;
    else if (gap == 0 && gap_mirror == 0)
        out.epsilon = 0;
    else if (gap == 0 && gap_mirror == 1)
        out.epsilon = 1;
    else
        throw ConsistencyError("epsilon case split is not exhaustive for " + c.name());

    if (out.epsilon == 0 && (out.tau != 0 || out.nu != 0 || out.nu_mirror != 0))
        throw ConsistencyError("epsilon = 0 forces tau = nu = nu(mirror) = 0, violated by " +
                               c.name());
    return out;
}

}  // namespace knottrace
