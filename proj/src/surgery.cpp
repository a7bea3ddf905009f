#include "knottrace/surgery.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "knottrace/f2.hpp"
#include "knottrace/hook.hpp"

namespace knottrace {

namespace {

int residue(int s, int modulus) { return ((s % modulus) + modulus) % modulus; }

}  // namespace

ConeResult cone_ranks(const KnotComplex& c, int n, std::optional<int> truncation_override) {
    int b_min = c.genus() + std::abs(n) + 2;
    int b = truncation_override.value_or(b_min);
    if (b < b_min)
        throw std::invalid_argument("truncation " + std::to_string(b) +
                                    " below the minimum " + std::to_string(b_min));

    ConeResult out;
    out.n = n;
    out.truncation = b;

    std::map<int, EdgeMapData> edges;
    std::map<int, int> a_dim;
    for (int s = -b; s <= b; ++s) {
        edges.emplace(s, edge_maps(c, s));
        a_dim[s] = static_cast<int>(edges.at(s).v_star.size());
    }
    const int t_lo = -b + n, t_hi = b;

    if (n == 0) {
        // The cone splits per s: the block map is (v + h)* : H(A_s) -> H(B_s).
        int g = c.genus();
        for (int s = -g - 1; s <= g + 1; ++s) {
            const auto& e = edges.at(s);
            bool map_nonzero = false;
            for (std::size_t k = 0; k < e.v_star.size(); ++k)
                if (e.v_star[k] ^ e.h_star[k]) map_nonzero = true;
            int rank = map_nonzero ? 1 : 0;
            int dim = a_dim[s] + 1 - 2 * rank;
            if (dim != 0) out.spinc_ranks[s] = dim;
            out.total_rank += dim;
            if (!map_nonzero) out.nonzero_inclusions.insert(s);
        }
    } else {
        int m = std::abs(n);
        for (int r = 0; r < m; ++r) {
            std::vector<int> col_s, row_t;
            for (int s = -b; s <= b; ++s)
                if (residue(s, m) == r) col_s.push_back(s);
            for (int t = t_lo; t <= t_hi; ++t)
                if (residue(t, m) == r) row_t.push_back(t);
            std::map<int, int> row_index;
            for (std::size_t k = 0; k < row_t.size(); ++k) row_index[row_t[k]] = (int)k;

            F2ColMatrix block(static_cast<int>(row_t.size()));
            int src_dim = 0;
            for (int s : col_s) {
                const auto& e = edges.at(s);
                src_dim += a_dim[s];
                for (std::size_t k = 0; k < e.v_star.size(); ++k) {
                    F2Vec col(static_cast<int>(row_t.size()));
                    if (e.v_star[k] && row_index.count(s)) col.flip(row_index.at(s));
                    if (e.h_star[k] && row_index.count(s + n)) col.flip(row_index.at(s + n));
                    block.add_col(std::move(col));
                }
            }
            int rank = column_rank(block);
            int dim = src_dim + static_cast<int>(row_t.size()) - 2 * rank;
            out.spinc_ranks[r] = dim;
            out.total_rank += dim;

            F2Reducer span;
            for (const auto& col : block.cols) span.insert(col);
            for (int t : row_t) {
                F2Vec unit(static_cast<int>(row_t.size()));
                unit.flip(row_index.at(t));
                if (!span.in_span(unit)) out.nonzero_inclusions.insert(t);
            }
        }
    }

    if (!out.nonzero_inclusions.empty()) out.s_max = *out.nonzero_inclusions.rbegin();
    return out;
}

bool surgery_map_nonzero(const KnotComplex& c, int n, int s) {
    int b = c.genus() + std::abs(n) + 2;
    if (std::abs(s) > b)
        throw std::out_of_range("spin^c label " + std::to_string(s) +
                                " outside the truncation range [-" + std::to_string(b) + ", " +
                                std::to_string(b) + "]; widen the truncation");
    return cone_ranks(c, n).nonzero_inclusions.count(s) > 0;
}

TraceProfile trace_profile(const KnotComplex& c, int n,
                           std::optional<int> truncation_override) {
    TraceProfile p;
    p.n = n;
    p.s_max = cone_ranks(c, n, truncation_override).s_max;
    p.s_prime_max = cone_ranks(c.mirrored(), -n, truncation_override).s_max;
    return p;
}

}  // namespace knottrace
