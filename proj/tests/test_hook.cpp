#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knottrace/hook.hpp"
#include "knottrace/library.hpp"

using namespace knottrace;

namespace {

KnotComplex trefoil() { return staircase_torus_knot(1); }

KnotComplex fig8() { return find_entry("fig8")->complex; }

KnotComplex unknot() { return find_entry("unknot")->complex; }

// brute force: the unique class of generator g in the locus, scanning i
std::pair<int, int> forced_position(const KnotComplex& c, HookKind kind, int s, int g) {
    int a = c.generator(g).alexander;
    for (int i = -50; i <= 50; ++i) {
        int j = i + a;
        bool in = kind == HookKind::As  ? std::max(i, j - s) == 0
                  : kind == HookKind::B ? i == 0
                                        : j == s;
        if (in) return {i, j};
    }
    FAIL("no lattice class in locus");
    return {0, 0};
}

}  // namespace

TEST_CASE("forced positions match a brute-force lattice scan") {
    for (const auto* name : {"unknot", "T23", "T25", "fig8"}) {
        const KnotComplex& c = find_entry(name)->complex;
        for (int s = -3; s <= 3; ++s) {
            for (auto kind : {HookKind::As, HookKind::B, HookKind::Slice}) {
                HookComplex h = subquotient(c, kind, s);
                REQUIRE(h.size() == c.size());
                for (int g = 0; g < c.size(); ++g) {
                    auto [i, j] = forced_position(c, kind, s, g);
                    CHECK(h.elements[g].i == i);
                    CHECK(h.elements[g].j == j);
                    CHECK(h.elements[g].j - h.elements[g].i == c.generator(g).alexander);
                }
            }
        }
    }
}

TEST_CASE("trefoil A_1 keeps only the vertical arrow") {
    KnotComplex t = trefoil();
    int a = t.index_of("g1"), b = t.index_of("g0"), c = t.index_of("g-1");
    HookComplex h = subquotient(t, HookKind::As, 1);
    CHECK(h.elements[a].i == 0);
    CHECK(h.elements[a].j == 1);
    CHECK(h.elements[b].i == 0);
    CHECK(h.elements[b].j == 0);
    CHECK(h.elements[c].i == 0);
    CHECK(h.elements[c].j == -1);
    CHECK(h.arrows == std::set<std::pair<int, int>>{{b, c}});
}

TEST_CASE("trefoil A_0 keeps both arrows and has one-dimensional homology") {
    KnotComplex t = trefoil();
    int a = t.index_of("g1"), b = t.index_of("g0"), c = t.index_of("g-1");
    HookComplex h = subquotient(t, HookKind::As, 0);
    CHECK(h.elements[a].i == -1);
    CHECK(h.elements[a].j == 0);
    CHECK(h.arrows == std::set<std::pair<int, int>>{{b, c}, {b, a}});
    HomologyPresentation hom = homology(h);
    CHECK(hom.dimension == 1);
    REQUIRE(hom.basis.size() == 1);
    // the class of a (equivalently c, mod the boundary a + c)
    CHECK((hom.basis[0] == std::vector<int>{a} || hom.basis[0] == std::vector<int>{c}));
}

TEST_CASE("unknot hooks") {
    KnotComplex u = unknot();
    HookComplex a1 = subquotient(u, HookKind::As, 1);
    CHECK(a1.elements[0].i == 0);
    CHECK(a1.elements[0].j == 0);
    HookComplex s1 = subquotient(u, HookKind::Slice, 1);
    CHECK(s1.elements[0].i == 1);
    CHECK(s1.elements[0].j == 1);
    CHECK(homology(s1).dimension == 1);
}

TEST_CASE("trefoil B homology: dimension 1 in Maslov grading 0") {
    KnotComplex t = trefoil();
    HookComplex b = subquotient(t, HookKind::B);
    CHECK(b.arrows.size() == 1);  // only the vertical arrow survives in {i=0}
    HomologyPresentation hom = homology(b);
    CHECK(hom.dimension == 1);
    CHECK(hom.basis[0] == std::vector<int>{t.index_of("g1")});
    CHECK(hom.graded_dims == std::map<int, int>{{0, 1}});
}

TEST_CASE("figure-eight A_0 has dimension 3") {
    KnotComplex f = fig8();
    HookComplex h = subquotient(f, HookKind::As, 0);
    // only the relation q -> p + s survives the position filter
    int q = f.index_of("q");
    CHECK(h.arrows ==
          std::set<std::pair<int, int>>{{q, f.index_of("p")}, {q, f.index_of("s")}});
    HomologyPresentation hom = homology(h);
    CHECK(hom.dimension == 3);
}

TEST_CASE("edge maps of the trefoil") {
    KnotComplex t = trefoil();
    EdgeMapData e1 = edge_maps(t, 1);
    CHECK(e1.v_star == std::vector<std::uint8_t>{1});
    CHECK(e1.h_star == std::vector<std::uint8_t>{0});
    EdgeMapData e0 = edge_maps(t, 0);
    CHECK(e0.v_star == std::vector<std::uint8_t>{0});
    CHECK(e0.h_star == std::vector<std::uint8_t>{0});
}

TEST_CASE("edge maps of the figure-eight at s = 0 are equal and nonzero") {
    KnotComplex f = fig8();
    EdgeMapData e = edge_maps(f, 0);
    REQUIRE(e.v_star.size() == 3);
    CHECK(e.v_star == e.h_star);
    CHECK(e.v_nonzero());
    int ones = 0;
    for (auto b : e.v_star) ones += b;
    CHECK(ones == 1);
}

TEST_CASE("B and slice homology is one-dimensional across the library") {
    for (const auto& entry : builtin_library()) {
        CHECK(homology(subquotient(entry.complex, HookKind::B)).dimension == 1);
        for (int s = -4; s <= 4; ++s)
            CHECK(homology(subquotient(entry.complex, HookKind::Slice, s)).dimension == 1);
    }
}

TEST_CASE("tail behavior and monotonicity of the edge maps") {
    for (const auto& entry : builtin_library()) {
        const KnotComplex& c = entry.complex;
        int g = c.genus();
        bool v_seen = false, h_gone = false;
        for (int s = -g - 3; s <= g + 3; ++s) {
            EdgeMapData e = edge_maps(c, s);
            if (s > g) {
                CHECK_FALSE(e.h_nonzero());
                CHECK(e.v_star.size() == 1);
                CHECK(e.v_nonzero());
            }
            if (s < -g) {
                CHECK_FALSE(e.v_nonzero());
                CHECK(e.h_nonzero());
            }
            // nonzero v is an up-set, nonzero h a down-set
            if (v_seen) CHECK(e.v_nonzero());
            v_seen = v_seen || e.v_nonzero();
            if (h_gone) CHECK_FALSE(e.h_nonzero());
            h_gone = h_gone || !e.h_nonzero();
        }
    }
}

TEST_CASE("duality: v_s surjective iff h_{-s} surjective, per complex") {
    for (const auto& entry : builtin_library()) {
        const KnotComplex& c = entry.complex;
        int g = c.genus();
        for (int s = -g - 2; s <= g + 2; ++s) {
            CHECK(edge_maps(c, s).v_nonzero() == edge_maps(c, -s).h_nonzero());
        }
        // the same statement holds for the dualized complex
        KnotComplex m = c.mirrored();
        for (int s = -g - 2; s <= g + 2; ++s) {
            CHECK(edge_maps(m, s).v_nonzero() == edge_maps(m, -s).h_nonzero());
        }
    }
}
