#pragma once

#include "knottrace/complex.hpp"

namespace knottrace {

// Smallest s for which the sublevel subcomplex {A(x) <= s} of B carries a
// cycle generating H(B).
int tau(const KnotComplex& c);

// Smallest s for which v_s is surjective on homology.
int nu(const KnotComplex& c);

// Case split on the (nu - tau) gaps of the complex and its mirror:
//   gap 1, mirror gap 0  ->  -1
//   gap 0, mirror gap 0  ->   0
//   gap 0, mirror gap 1  ->  +1
// Any other combination is an exhaustiveness failure.
int epsilon(const KnotComplex& c);

struct InvariantBundle {
    int tau = 0;
    int nu = 0;
    int epsilon = 0;
    int genus = 0;
    int tau_mirror = 0;
    int nu_mirror = 0;
};

InvariantBundle bundle(const KnotComplex& c);

}  // namespace knottrace
