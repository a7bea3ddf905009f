#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "knottrace/complex.hpp"

namespace knottrace {

// Subquotients of the bigraded complex, each containing one lattice class per
// generator:
//
//   As     {max(i, j - s) = 0}   i = min(0, s - A(x)), j = A(x) + i
//   B      {i = 0}               i = 0, j = A(x)
//   Slice  {j = s}               i = s - A(x), j = s
//
// An arrow survives exactly when the differential drops the source class onto
// the target's class inside the same locus.
enum class HookKind { As, B, Slice };

struct HookElement {
    int gen;  // index into the parent's generator list
    int i;
    int j;
    int maslov;  // M(x) + 2i
};

struct HookComplex {
    HookKind kind;
    int s = 0;  // parameter for As / Slice; unused for B
    std::vector<HookElement> elements;           // one per generator, parent order
    std::set<std::pair<int, int>> arrows;        // indices into elements
    int size() const { return static_cast<int>(elements.size()); }
};

HookComplex subquotient(const KnotComplex& c, HookKind kind, int s = 0);

struct HomologyPresentation {
    int dimension = 0;
    std::vector<std::vector<int>> basis;  // cycle representatives, element-index subsets
    std::map<int, int> graded_dims;       // Maslov grading -> dimension
};

HomologyPresentation homology(const HookComplex& h);

// Homology-level edge maps out of H(A_s): v kills elements with i < 0, h kills
// elements with j < s.  Entry k records whether the k-th basis cycle of H(A_s)
// maps to the generator of the one-dimensional target homology.
struct EdgeMapData {
    int s = 0;
    std::vector<std::uint8_t> v_star;
    std::vector<std::uint8_t> h_star;

    bool v_nonzero() const {
        for (auto b : v_star)
            if (b) return true;
        return false;
    }
    bool h_nonzero() const {
        for (auto b : h_star)
            if (b) return true;
        return false;
    }
};

EdgeMapData edge_maps(const KnotComplex& c, int s);

}  // namespace knottrace
