#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knottrace/f2.hpp"

using namespace knottrace;

namespace {

F2ColMatrix random_matrix(std::mt19937& rng, int rows, int cols, double density = 0.4) {
    F2ColMatrix m(rows);
    std::bernoulli_distribution bit(density);
    for (int j = 0; j < cols; ++j) {
        F2Vec c(rows);
        for (int i = 0; i < rows; ++i)
            if (bit(rng)) c.set(i);
        m.add_col(std::move(c));
    }
    return m;
}

F2Vec apply(const F2ColMatrix& m, const F2Vec& x) {
    F2Vec out(m.target_dim);
    for (int j = 0; j < m.source_dim(); ++j)
        if (x.get(j)) out.xor_with(m.cols[j]);
    return out;
}

}  // namespace

TEST_CASE("bit vector basics") {
    F2Vec v(130);
    CHECK(v.is_zero());
    CHECK(v.lowest_set() == -1);
    v.set(0);
    v.set(129);
    CHECK(v.get(0));
    CHECK(v.get(129));
    CHECK(v.lowest_set() == 0);
    v.flip(0);
    CHECK(v.lowest_set() == 129);
    F2Vec w(130);
    w.set(129);
    v.xor_with(w);
    CHECK(v.is_zero());
}

TEST_CASE("reducer rank and span membership") {
    F2Reducer r;
    F2Vec a(4), b(4), c(4);
    a.set(0);
    a.set(1);
    b.set(1);
    b.set(2);
    c.set(0);
    c.set(2);  // c = a + b
    CHECK(r.insert(a));
    CHECK(r.insert(b));
    CHECK_FALSE(r.insert(c));
    CHECK(r.rank() == 2);
    CHECK(r.in_span(c));
    F2Vec d(4);
    d.set(3);
    CHECK_FALSE(r.in_span(d));
}

TEST_CASE("kernel vectors annihilate and span the kernel") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 12);
        int cols = 1 + static_cast<int>(rng() % 12);
        F2ColMatrix m = random_matrix(rng, rows, cols);
        auto kernel = null_space(m);
        int rank = column_rank(m);
        CHECK(static_cast<int>(kernel.size()) == cols - rank);
        F2Reducer independent;
        for (const auto& z : kernel) {
            CHECK(apply(m, z).is_zero());
            CHECK(independent.insert(z));
        }
    }
}

TEST_CASE("rank invariant under column operations") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 10);
        int cols = 2 + static_cast<int>(rng() % 10);
        F2ColMatrix m = random_matrix(rng, rows, cols);
        int before = column_rank(m);
        int i = static_cast<int>(rng() % cols), j = static_cast<int>(rng() % cols);
        if (i != j) m.cols[i].xor_with(m.cols[j]);
        CHECK(column_rank(m) == before);
    }
}

TEST_CASE("column span membership matches an explicit solve") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 8);
        int cols = 2 + static_cast<int>(rng() % 8);
        F2ColMatrix m = random_matrix(rng, rows, cols);
        F2Vec x(cols);
        for (int j = 0; j < cols; ++j)
            if (rng() % 2) x.set(j);
        CHECK(in_column_span(m, apply(m, x)));
    }
}
