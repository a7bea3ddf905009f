#include "knottrace/formulas.hpp"

#include <cstdlib>
#include <stdexcept>

#include "knottrace/invariants.hpp"

namespace knottrace {

LevineResult levine(int tau, int epsilon) {
    if (epsilon < -1 || epsilon > 1)
        throw std::invalid_argument("epsilon must be in {-1, 0, 1}");
    if (epsilon == 0 && tau != 0)
        throw std::invalid_argument("inconsistent pair: epsilon = 0 forces tau = 0");
    LevineResult out;
    out.tau_p = (tau > 0 || epsilon == -1) ? tau + 1 : tau;
    out.epsilon_p = (tau == 0 && epsilon == 0) ? 0 : 1;
    return out;
}

int nu_mazur(int nu, int tau) {
    if (nu != tau && nu != tau + 1)
        throw std::invalid_argument("gap violation: nu must be tau or tau + 1");
    return (nu == tau && nu > 0) ? nu + 1 : nu;
}

int twisted_nu_lower_bound(int nu_p, int n) {
    if (n > 0)
        throw std::invalid_argument("twist inequality needs n <= 0; the direction reverses "
                                    "for positive twists");
    return nu_p;
}

SatelliteResult mazur_satellite(int tau, int nu, int epsilon, std::optional<int> twist) {
    LevineResult lev = levine(tau, epsilon);
    SatelliteResult out;
    out.tau_p = lev.tau_p;
    out.epsilon_p = lev.epsilon_p;
    out.nu_p = nu_mazur(nu, tau);
    if (twist) out.nu_twisted_lower = twisted_nu_lower_bound(out.nu_p, *twist);
    return out;
}

std::optional<int> epsilon_sum(int e1, int e2) {
    if (e1 == e2) return e1;
    if (e1 == 0) return e2;
    if (e2 == 0) return e1;
    return std::nullopt;
}

PqCertificate pq_verdict(const KnotComplex& c, int n) {
    InvariantBundle inv = bundle(c);
    PqCertificate out;
    out.n = n;
    out.tau_k = inv.tau;
    out.nu_k = inv.nu;

    if (inv.nu != inv.tau) {
        out.failed_hypothesis = "requires nu(K) = tau(K); got nu = " + std::to_string(inv.nu) +
                                ", tau = " + std::to_string(inv.tau);
        return out;
    }
    if (inv.tau <= 0) {
        out.failed_hypothesis =
            "requires nu(K) = tau(K) > 0; got nu = " + std::to_string(inv.nu);
        return out;
    }
    if (n > 0) {
        out.failed_hypothesis = "requires framing n <= 0; got n = " + std::to_string(n);
        return out;
    }

    out.exotic = true;
    out.nu_q = inv.nu;  // Q_n(K) is concordant to K
    out.nu_p_lower = twisted_nu_lower_bound(nu_mazur(inv.nu, inv.tau), n);
    out.uses = {
        "USES pattern-q-concordance",
        "USES mazur-satellite-nu-formula",
        "USES positive-twist-nu-monotonicity",
        "USES nu-trace-invariance",
    };
    return out;
}

std::vector<ShakeBound> shake_bounds(int nu, int n) {
    std::vector<ShakeBound> out;
    if (n < 2 * nu - 1) out.push_back({nu - 1, "rule-1", ""});
    bool clean = (n == 0) || (2 - 2 * nu < n && n <= 2 * nu - 2);
    if (clean)
        out.push_back({nu, "clean-window", ""});
    else if (n < 2 * nu - 1)
        out.push_back({nu, "rule-2", "-2*g_sh < n"});
    if (n >= 0 && nu >= 1) out.push_back({1, "rule-3", ""});
    return out;
}

BennequinReport bennequin_check(int tb, int rot, int nu, int n, std::optional<int> g_sh) {
    BennequinReport out;
    out.weak_applicable = n <= 2 * nu - 2;
    out.strong_applicable = (n == 0) || (2 - 2 * nu < n && n <= 2 * nu - 2);
    if (g_sh) {
        int lhs = tb + std::abs(rot);
        if (out.weak_applicable) out.weak_holds = lhs <= 2 * *g_sh + 1;
        if (out.strong_applicable) out.strong_holds = lhs <= 2 * *g_sh - 1;
        out.inconsistent_inputs = (out.weak_holds && !*out.weak_holds) ||
                                  (out.strong_holds && !*out.strong_holds);
    }
    return out;
}

bool adjunction_allows(int g, int self_int, int c1, SurfaceKind kind) {
    if (g < 0) throw std::invalid_argument("genus slot must be nonnegative");
    if (kind == SurfaceKind::Disk) return 2 * g + c1 + self_int <= 0;
    int budget = (self_int > -2 * g) ? 2 * g - 2 : 2 * g;
    return std::abs(c1) + self_int <= budget;
}

}  // namespace knottrace
