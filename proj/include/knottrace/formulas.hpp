#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knottrace/complex.hpp"

namespace knottrace {

struct LevineResult {
    int tau_p = 0;
    int epsilon_p = 0;
};

// Mazur-satellite values from (tau, epsilon):
//   tau(P(K)) = tau + 1 if tau > 0 or epsilon = -1, else tau
//   eps(P(K)) = 0 if tau = epsilon = 0, else 1
LevineResult levine(int tau, int epsilon);

// nu(P(K)) = nu + 1 if nu = tau > 0, else nu.  Requires nu in {tau, tau+1}.
int nu_mazur(int nu, int tau);

// For n <= 0 the n-twisted satellite satisfies nu(P_n(K)) >= nu(P(K)).
int twisted_nu_lower_bound(int nu_p, int n);

struct SatelliteResult {
    int tau_p = 0;
    int nu_p = 0;
    int epsilon_p = 0;
    std::optional<int> nu_twisted_lower;  // present when a twist n <= 0 was given
};

SatelliteResult mazur_satellite(int tau, int nu, int epsilon,
                                std::optional<int> twist = {});

// epsilon of a connected sum at tuple level: defined when the signs agree or
// one vanishes, otherwise undetermined.
std::optional<int> epsilon_sum(int e1, int e2);

struct PqCertificate {
    bool exotic = false;
    int n = 0;
    int tau_k = 0;
    int nu_k = 0;
    int nu_q = 0;         // nu of the Q_n satellite (meaningful when exotic)
    int nu_p_lower = 0;   // certified lower bound for nu of the P_n satellite
    std::string failed_hypothesis;  // nonempty when not applicable
    std::vector<std::string> uses;  // one "USES <rule>" line per cited result
};

// The satellite-trace pipeline: for nu = tau > 0 and n <= 0 the P_n and Q_n
// satellites have homeomorphic n-traces with different nu, hence the traces
// are not diffeomorphic.
PqCertificate pq_verdict(const KnotComplex& c, int n);

struct ShakeBound {
    int bound = 0;
    std::string rule;
    std::string condition;  // empty = unconditional
    bool unconditional() const { return condition.empty(); }
};

// Lower bounds for the n-shake genus from nu:
//   rule 1:  n < 2 nu - 1            ->  bound nu - 1, unconditional
//   clean:   n = 0 or 2-2nu < n <= 2nu-2 -> bound nu, unconditional
//   rule 2:  otherwise, n < 2 nu - 1 ->  bound nu, conditional on -2 g_sh < n
//   rule 3:  n >= 0, nu >= 1         ->  bound 1 (g_sh = 0 would force nu <= 0)
std::vector<ShakeBound> shake_bounds(int nu, int n);

struct BennequinReport {
    bool weak_applicable = false;    // n <= 2 nu - 2:  tb + |rot| <= 2 g_sh + 1
    bool strong_applicable = false;  // clean window:   tb + |rot| <= 2 g_sh - 1
    std::optional<bool> weak_holds;
    std::optional<bool> strong_holds;
    bool inconsistent_inputs = false;
};

BennequinReport bennequin_check(int tb, int rot, int nu, int n, std::optional<int> g_sh);

enum class SurfaceKind { Closed, Disk };

// Closed kind: whether a nonzero cobordism map is permitted for a genus-g
// surface, |c1| + S.S <= 2g, tightened to 2g - 2 when S.S > -2g.  Disk kind:
// 2 nu + |[D]| + [D].[D] <= 0 with nu passed in the g slot and |[D]| in c1.
bool adjunction_allows(int g, int self_int, int c1, SurfaceKind kind);

}  // namespace knottrace
