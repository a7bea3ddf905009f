#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knottrace/complex.hpp"
#include "knottrace/invariants.hpp"
#include "knottrace/library.hpp"

using namespace knottrace;

namespace {

const char* kTrefoil =
    "knot T23\n"
    "gen a A=1 M=0\n"
    "gen b A=0 M=-1\n"
    "gen c A=-1 M=-2\n"
    "arr b c\n"
    "arr b a\n";

const char* kFigureEight =
    "knot fig8\n"
    "gen p A=1 M=1\n"
    "gen q A=0 M=0\n"
    "gen r A=0 M=0\n"
    "gen e A=0 M=0\n"
    "gen s A=-1 M=-1\n"
    "arr q p\n"
    "arr q s\n"
    "arr p r\n"
    "arr s r\n";

}  // namespace

TEST_CASE("unknot parses and validates") {
    KnotComplex u = KnotComplex::parse("knot unknot\ngen u A=0 M=0\n");
    CHECK(u.size() == 1);
    CHECK(u.arrows().empty());
    CHECK(u.genus() == 0);
    CHECK(u.hfk_ranks() == std::map<int, int>{{0, 1}});
}

TEST_CASE("trefoil drops follow the grading formulas") {
    KnotComplex t = KnotComplex::parse(kTrefoil);
    int b = t.index_of("b"), a = t.index_of("a"), c = t.index_of("c");
    CHECK(t.idrop(b, c) == 0);
    CHECK(t.jdrop(b, c) == 1);
    CHECK(t.idrop(b, a) == 1);
    CHECK(t.jdrop(b, a) == 0);
}

TEST_CASE("comments and blank lines are ignored") {
    KnotComplex t = KnotComplex::parse(
        "# a trefoil\nknot T23\n\ngen a A=1 M=0  # top\ngen b A=0 M=-1\ngen c A=-1 M=-2\n"
        "arr b c\narr b a\n");
    CHECK(t.size() == 3);
}

TEST_CASE("grading violation: non-integer i-drop") {
    // a -> c has (M(c) - M(a) + 1)/2 = -1/2
    CHECK_THROWS_AS(KnotComplex::parse("knot bad\n"
                                       "gen a A=1 M=0\n"
                                       "gen b A=0 M=-1\n"
                                       "gen c A=-1 M=-2\n"
                                       "arr a c\n"),
                    ValidationError);
    try {
        KnotComplex::parse("knot bad\ngen a A=1 M=0\ngen c A=-1 M=-2\narr a c\n");
        FAIL("expected a grading violation");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == Violation::Grading);
        CHECK(std::string(e.what()).find("a -> c") != std::string::npos);
    }
}

TEST_CASE("grading violation: negative drop") {
    // reversing b -> a gives i-drop (-(-1) - 0 + 1)/2 = 0 but j-drop 0 + 1 - 0... use
    // an arrow raising the Maslov grading by 3: i-drop (3+1)/2 = 2, j-drop 2 - 3 = -1.
    try {
        KnotComplex::parse("knot bad\ngen x A=0 M=0\ngen y A=3 M=3\narr x y\n");
        FAIL("expected a grading violation");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == Violation::Grading);
    }
}

TEST_CASE("differential violation: d^2 != 0") {
    try {
        KnotComplex::parse("knot bad\n"
                           "gen x A=0 M=0\n"
                           "gen y A=0 M=-1\n"
                           "gen z A=0 M=-2\n"
                           "arr x y\narr y z\n");
        FAIL("expected a differential violation");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == Violation::Differential);
    }
}

TEST_CASE("symmetry violation") {
    try {
        KnotComplex::parse("knot bad\ngen x A=1 M=0\ngen u A=0 M=0\n");
        FAIL("expected a symmetry violation");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == Violation::Symmetry);
    }
}

TEST_CASE("normalization violation: dim H(B) != 1") {
    try {
        KnotComplex::parse("knot bad\ngen x A=0 M=0\ngen y A=0 M=0\n");
        FAIL("expected a normalization violation");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == Violation::Normalization);
    }
    // the empty complex fails the same check
    try {
        KnotComplex::parse("knot empty\n");
        FAIL("expected a normalization violation");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == Violation::Normalization);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(KnotComplex::parse("gen u A=0 M=0\n"), ValidationError);
    CHECK_THROWS_AS(KnotComplex::parse("knot k\ngen u A=0 M=0\ngen u A=0 M=0\n"),
                    ValidationError);
    CHECK_THROWS_AS(KnotComplex::parse("knot k\ngen u A=0 M=0\narr u v\n"), ValidationError);
    CHECK_THROWS_AS(KnotComplex::parse("knot k\ngen u A=zero M=0\n"), ValidationError);
    CHECK_THROWS_AS(KnotComplex::parse("knot k\nfoo bar\n"), ValidationError);
    CHECK_THROWS_AS(
        KnotComplex::parse("knot k\ngen a A=1 M=0\ngen b A=0 M=-1\ngen c A=-1 M=-2\n"
                           "arr b c\narr b c\narr b a\n"),
        ValidationError);
}

TEST_CASE("hfk ranks and genus") {
    KnotComplex t = KnotComplex::parse(kTrefoil);
    CHECK(t.hfk_ranks() == std::map<int, int>{{-1, 1}, {0, 1}, {1, 1}});
    CHECK(t.genus() == 1);

    KnotComplex f = KnotComplex::parse(kFigureEight);
    CHECK(f.hfk_ranks() == std::map<int, int>{{-1, 1}, {0, 3}, {1, 1}});
    CHECK(f.genus() == 1);
}

TEST_CASE("mirror negates gradings and reverses arrows") {
    KnotComplex t = KnotComplex::parse(kTrefoil);
    KnotComplex m = t.mirrored();
    int a = m.index_of("a"), b = m.index_of("b"), c = m.index_of("c");
    CHECK(m.generator(a).alexander == -1);
    CHECK(m.generator(a).maslov == 0);
    CHECK(m.arrows() == std::set<std::pair<int, int>>{{c, b}, {a, b}});
    CHECK(nu(m) == 0);

    // double mirror restores the complex exactly
    KnotComplex mm = m.mirrored();
    CHECK(mm.generators() == t.generators());
    CHECK(mm.arrows() == t.arrows());
}

TEST_CASE("mirror of the unknot is the unknot") {
    KnotComplex u = KnotComplex::parse("knot unknot\ngen u A=0 M=0\n");
    KnotComplex m = u.mirrored();
    CHECK(isomorphic(u, m) == IsoCheck::Isomorphic);
}

TEST_CASE("figure-eight is isomorphic to its mirror") {
    KnotComplex f = KnotComplex::parse(kFigureEight);
    CHECK(isomorphic(f, f.mirrored()) == IsoCheck::Isomorphic);
}

TEST_CASE("trefoil is not isomorphic to its mirror") {
    KnotComplex t = KnotComplex::parse(kTrefoil);
    CHECK(isomorphic(t, t.mirrored()) == IsoCheck::NotIsomorphic);
}

TEST_CASE("connected sum with the unknot is the identity up to isomorphism") {
    KnotComplex t = KnotComplex::parse(kTrefoil);
    KnotComplex u = KnotComplex::parse("knot unknot\ngen u A=0 M=0\n");
    CHECK(isomorphic(KnotComplex::connected_sum(t, u), t) == IsoCheck::Isomorphic);
    CHECK(isomorphic(KnotComplex::connected_sum(u, t), t) == IsoCheck::Isomorphic);
}

TEST_CASE("connected sum structure") {
    KnotComplex t = KnotComplex::parse(kTrefoil);
    KnotComplex s = KnotComplex::connected_sum(t, t);
    CHECK(s.size() == 9);
    CHECK(s.genus() == 2);
    CHECK(s.arrows().size() == 2 * 2 * 3);
}

TEST_CASE("connected sum commutes and associates up to isomorphism") {
    KnotComplex t = KnotComplex::parse(kTrefoil);
    KnotComplex u = KnotComplex::parse("knot unknot\ngen u A=0 M=0\n");
    KnotComplex m = t.mirrored();
    CHECK(isomorphic(KnotComplex::connected_sum(t, m), KnotComplex::connected_sum(m, t)) ==
          IsoCheck::Isomorphic);
    KnotComplex left = KnotComplex::connected_sum(KnotComplex::connected_sum(t, u), m);
    KnotComplex right = KnotComplex::connected_sum(t, KnotComplex::connected_sum(u, m));
    CHECK(isomorphic(left, right) == IsoCheck::Isomorphic);
}

TEST_CASE("isomorphism comparison is unsupported above multiplicity three") {
    KnotComplex t = KnotComplex::parse(kTrefoil);
    KnotComplex t2 = KnotComplex::connected_sum(t, t);
    KnotComplex t3 = KnotComplex::connected_sum(t2, t);  // middle class has multiplicity 7
    CHECK(isomorphic(t3, t3) == IsoCheck::Unsupported);
}

TEST_CASE("wire format round-trips") {
    for (const auto& entry : builtin_library()) {
        KnotComplex back = KnotComplex::parse(entry.complex.to_text());
        CHECK(back.generators() == entry.complex.generators());
        CHECK(back.arrows() == entry.complex.arrows());
        CHECK(back.name() == entry.complex.name());
    }
}
