#pragma once

#include <cstdint>
#include <vector>

namespace knottrace {

// Dense bit vector over GF(2).
class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(int n) : words_((n + 63) / 64, 0), n_(n) {}

    int size() const { return n_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void xor_with(const F2Vec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }
    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    int lowest_set() const;  // -1 if zero

    bool operator==(const F2Vec&) const = default;

private:
    std::vector<std::uint64_t> words_;
    int n_ = 0;
};

// Incremental reducer keeping an echelon basis with distinct pivots.
class F2Reducer {
public:
    // Reduces v against the basis; a nonzero remainder joins the basis and
    // true is returned, otherwise v was already in the span.
    bool insert(F2Vec v);
    bool in_span(F2Vec v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(F2Vec& v) const;
    std::vector<F2Vec> rows_;
    std::vector<int> pivots_;
};

// A linear map stored column-wise: each column is a vector in the target.
struct F2ColMatrix {
    int target_dim = 0;
    std::vector<F2Vec> cols;

    explicit F2ColMatrix(int rows = 0) : target_dim(rows) {}
    void add_col(F2Vec c) { cols.push_back(std::move(c)); }
    int source_dim() const { return static_cast<int>(cols.size()); }
};

int column_rank(const F2ColMatrix& m);
bool in_column_span(const F2ColMatrix& m, const F2Vec& v);

// Basis of the kernel {x : m x = 0}, as source-space vectors.
std::vector<F2Vec> null_space(const F2ColMatrix& m);

}  // namespace knottrace
