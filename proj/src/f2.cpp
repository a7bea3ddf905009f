#include "knottrace/f2.hpp"

#include <bit>

namespace knottrace {

int F2Vec::lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    }
    return -1;
}

void F2Reducer::reduce(F2Vec& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (v.get(pivots_[k])) v.xor_with(rows_[k]);
    }
}

bool F2Reducer::insert(F2Vec v) {
    reduce(v);
    int p = v.lowest_set();
    if (p < 0) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool F2Reducer::in_span(F2Vec v) const {
    reduce(v);
    return v.is_zero();
}

int column_rank(const F2ColMatrix& m) {
    F2Reducer r;
    for (const auto& c : m.cols) r.insert(c);
    return r.rank();
}

bool in_column_span(const F2ColMatrix& m, const F2Vec& v) {
    F2Reducer r;
    for (const auto& c : m.cols) r.insert(c);
    return r.in_span(v);
}

std::vector<F2Vec> null_space(const F2ColMatrix& m) {
    // Reduce the columns while tracking the combination that produced each
    // remainder; a combination reducing to zero is a kernel vector.
    int n = m.source_dim();
    std::vector<F2Vec> rows, tags;
    std::vector<int> pivots;
    std::vector<F2Vec> kernel;
    for (int j = 0; j < n; ++j) {
        F2Vec v = m.cols[j];
        F2Vec tag(n);
        tag.set(j);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (v.get(pivots[k])) {
                v.xor_with(rows[k]);
                tag.xor_with(tags[k]);
            }
        }
        int p = v.lowest_set();
        if (p < 0) {
            kernel.push_back(std::move(tag));
        } else {
            rows.push_back(std::move(v));
            tags.push_back(std::move(tag));
            pivots.push_back(p);
        }
    }
    return kernel;
}

}  // namespace knottrace
