#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knottrace/hook.hpp"
#include "knottrace/invariants.hpp"
#include "knottrace/library.hpp"

using namespace knottrace;

namespace {

KnotComplex lib(const char* expr) { return resolve_library_expr(expr); }

}  // namespace

TEST_CASE("unknot invariants vanish") {
    InvariantBundle b = bundle(lib("unknot"));
    CHECK(b.tau == 0);
    CHECK(b.nu == 0);
    CHECK(b.epsilon == 0);
    CHECK(b.genus == 0);
    CHECK(b.tau_mirror == 0);
    CHECK(b.nu_mirror == 0);
}

TEST_CASE("right-handed trefoil: nu = tau = epsilon = 1") {
    InvariantBundle b = bundle(lib("T23"));
    CHECK(b.tau == 1);
    CHECK(b.nu == 1);
    CHECK(b.epsilon == 1);
    CHECK(b.genus == 1);
    CHECK(b.tau_mirror == -1);
    CHECK(b.nu_mirror == 0);
}

TEST_CASE("T(2,5) staircase: nu = tau = 2") {
    CHECK(nu(lib("T25")) == 2);
    CHECK(tau(lib("T25")) == 2);
    CHECK(epsilon(lib("T25")) == 1);
}

TEST_CASE("figure-eight: everything vanishes, genus 1") {
    InvariantBundle b = bundle(lib("fig8"));
    CHECK(b.tau == 0);
    CHECK(b.nu == 0);
    CHECK(b.epsilon == 0);
    CHECK(b.genus == 1);
    CHECK(b.nu_mirror == 0);
}

TEST_CASE("trefoil # trefoil bundle") {
    InvariantBundle b = bundle(lib("sum(T23,T23)"));
    CHECK(b.tau == 2);
    CHECK(b.nu == 2);
    CHECK(b.epsilon == 1);
    CHECK(b.genus == 2);
    CHECK(b.tau_mirror == -2);
    CHECK(b.nu_mirror == -1);
}

TEST_CASE("trefoil # mirror trefoil is invariant-trivial") {
    InvariantBundle b = bundle(lib("sum(T23,mirror(T23))"));
    CHECK(b.tau == 0);
    CHECK(b.nu == 0);
    CHECK(b.epsilon == 0);
}

TEST_CASE("published library values match computation exactly") {
    for (const auto& entry : builtin_library()) {
        InvariantBundle b = bundle(entry.complex);
        for (const auto& [key, pub] : entry.published) {
            int got = key == "tau"       ? b.tau
                      : key == "nu"      ? b.nu
                      : key == "epsilon" ? b.epsilon
                                         : b.genus;
            CHECK_MESSAGE(got == pub.value, entry.name, ".", key);
        }
    }
}

TEST_CASE("epsilon flips sign under mirroring") {
    for (const auto* name : {"unknot", "T23", "T25", "T27", "fig8"}) {
        KnotComplex c = lib(name);
        CHECK(epsilon(c.mirrored()) == -epsilon(c));
    }
}

TEST_CASE("tau of the mirror is minus tau on the library") {
    for (const auto& entry : builtin_library())
        CHECK(tau(entry.complex.mirrored()) == -tau(entry.complex));
}

TEST_CASE("v and h induce the same nonzero functional only at s = 0 with epsilon = 0") {
    for (const auto& entry : builtin_library()) {
        const KnotComplex& c = entry.complex;
        int eps = epsilon(c);
        int g = c.genus();
        for (int s = -g - 1; s <= g + 1; ++s) {
            EdgeMapData e = edge_maps(c, s);
            bool equal_nonzero = e.v_nonzero() && e.v_star == e.h_star;
            CHECK(equal_nonzero == (s == 0 && eps == 0));
        }
    }
}

TEST_CASE("tau is additive and nu subadditive on library pairs") {
    std::vector<KnotComplex> pool;
    for (const auto& entry : builtin_library()) {
        pool.push_back(entry.complex);
        pool.push_back(entry.complex.mirrored());
    }
    for (const auto& a : pool) {
        for (const auto& b : pool) {
            KnotComplex s = KnotComplex::connected_sum(a, b);
            CHECK(tau(s) == tau(a) + tau(b));
            CHECK(nu(s) <= nu(a) + nu(b));
        }
    }
}

TEST_CASE("nu stays within one of tau") {
    for (const auto& entry : builtin_library()) {
        int gap = nu(entry.complex) - tau(entry.complex);
        CHECK((gap == 0 || gap == 1));
    }
}
