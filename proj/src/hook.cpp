#include "knottrace/hook.hpp"

#include <algorithm>
#include <string>

#include "knottrace/f2.hpp"

namespace knottrace {

namespace {

bool in_locus(HookKind kind, int s, int i, int j) {
    switch (kind) {
        case HookKind::As: return std::max(i, j - s) == 0;
        case HookKind::B: return i == 0;
        case HookKind::Slice: return j == s;
    }
    return false;
}

F2ColMatrix boundary_matrix(const HookComplex& h) {
    F2ColMatrix d(h.size());
    std::vector<F2Vec> cols(h.size(), F2Vec(h.size()));
    for (const auto& [f, t] : h.arrows) cols[f].flip(t);
    for (auto& c : cols) d.add_col(std::move(c));
    return d;
}

}  // namespace

HookComplex subquotient(const KnotComplex& c, HookKind kind, int s) {
    HookComplex h;
    h.kind = kind;
    h.s = s;
    h.elements.reserve(c.size());
    for (int k = 0; k < c.size(); ++k) {
        int a = c.generator(k).alexander;
        int i = 0, j = a;
        switch (kind) {
            case HookKind::As:
                i = std::min(0, s - a);
                j = a + i;
                break;
            case HookKind::B:
                break;
            case HookKind::Slice:
                i = s - a;
                j = s;
                break;
        }
        h.elements.push_back({k, i, j, c.generator(k).maslov + 2 * i});
    }
    for (const auto& [f, t] : c.arrows()) {
        int ti = h.elements[f].i - c.idrop(f, t);
        int tj = h.elements[f].j - c.jdrop(f, t);
        if (ti == h.elements[t].i && tj == h.elements[t].j && in_locus(kind, s, ti, tj))
            h.arrows.emplace(f, t);
    }
    return h;
}

HomologyPresentation homology(const HookComplex& h) {
    HomologyPresentation out;
    F2ColMatrix d = boundary_matrix(h);

    // Basis: boundaries first, then kernel vectors extending them.
    F2Reducer reducer;
    for (const auto& col : d.cols) reducer.insert(col);
    int rank = reducer.rank();
    for (const auto& z : null_space(d)) {
        if (reducer.insert(z)) {
            std::vector<int> cycle;
            for (int k = 0; k < h.size(); ++k)
                if (z.get(k)) cycle.push_back(k);
            out.basis.push_back(std::move(cycle));
        }
    }
    out.dimension = static_cast<int>(out.basis.size());
    // dim ker - rank im, cross-checked against the quotient construction.
    if (out.dimension != h.size() - 2 * rank)
        throw ConsistencyError("homology dimension mismatch in subquotient");

    // Graded dimensions: the differential drops the element Maslov grading by 1.
    std::map<int, std::vector<int>> by_m;
    for (int k = 0; k < h.size(); ++k) by_m[h.elements[k].maslov].push_back(k);
    std::map<int, int> rank_from;  // rank of the block leaving grading m
    for (const auto& [m, gens] : by_m) {
        std::map<int, int> local;
        auto below = by_m.find(m - 1);
        if (below == by_m.end()) {
            rank_from[m] = 0;
            continue;
        }
        for (std::size_t k = 0; k < below->second.size(); ++k) local[below->second[k]] = (int)k;
        F2ColMatrix block(static_cast<int>(below->second.size()));
        for (int g : gens) {
            F2Vec col(static_cast<int>(below->second.size()));
            for (const auto& [f, t] : h.arrows)
                if (f == g && h.elements[t].maslov == m - 1) col.flip(local.at(t));
            block.add_col(std::move(col));
        }
        rank_from[m] = column_rank(block);
    }
    for (const auto& [m, gens] : by_m) {
        int from_above = rank_from.count(m + 1) ? rank_from[m + 1] : 0;
        int dim = static_cast<int>(gens.size()) - rank_from[m] - from_above;
        if (dim != 0) out.graded_dims[m] = dim;
    }
    return out;
}

EdgeMapData edge_maps(const KnotComplex& c, int s) {
    HookComplex as = subquotient(c, HookKind::As, s);
    HookComplex b = subquotient(c, HookKind::B);
    HookComplex slice = subquotient(c, HookKind::Slice, s);
    HomologyPresentation ha = homology(as);

    F2ColMatrix db = boundary_matrix(b);
    F2ColMatrix ds = boundary_matrix(slice);
    if (b.size() - 2 * column_rank(db) != 1)
        throw ConsistencyError("dim H(B) != 1 in edge map computation");
    if (slice.size() - 2 * column_rank(ds) != 1)
        throw ConsistencyError("dim H({j=" + std::to_string(s) + "}) != 1; complex has no"
                               " one-dimensional slice homology");

    F2Reducer b_boundaries, s_boundaries;
    for (const auto& col : db.cols) b_boundaries.insert(col);
    for (const auto& col : ds.cols) s_boundaries.insert(col);

    EdgeMapData out;
    out.s = s;
    out.v_star.reserve(ha.basis.size());
    out.h_star.reserve(ha.basis.size());
    for (const auto& cycle : ha.basis) {
        F2Vec v_img(b.size()), h_img(slice.size());
        for (int k : cycle) {
            if (as.elements[k].i == 0) v_img.flip(k);
            if (as.elements[k].j == s) h_img.flip(k);
        }
        // Images of cycles under a quotient chain map are cycles; their class
        // vanishes exactly when they are boundaries downstairs.
        out.v_star.push_back(b_boundaries.in_span(v_img) ? 0 : 1);
        out.h_star.push_back(s_boundaries.in_span(h_img) ? 0 : 1);
    }
    return out;
}

}  // namespace knottrace
