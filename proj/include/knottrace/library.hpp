#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knottrace/complex.hpp"

namespace knottrace {

struct PublishedValue {
    int value = 0;
    std::string source;
};

struct LibraryEntry {
    std::string name;
    KnotComplex complex;
    std::map<std::string, PublishedValue> published;        // invariant -> value
    std::multimap<std::string, std::string> relations;      // tag -> entry name
};

// Built-in complexes: the unknot, the T(2,3)/T(2,5)/T(2,7) staircases and the
// figure-eight.  Mirrors and connected sums are generated on demand through
// resolve_library_expr.
const std::vector<LibraryEntry>& builtin_library();
const LibraryEntry* find_entry(std::string_view name);

// Zigzag staircase of the (2, 2m+1) torus knot: generators g{m}..g{-m} with
// A = k and M = k - m; every other generator emits one vertical and one
// horizontal arrow.
KnotComplex staircase_torus_knot(int m);

// expr := NAME | mirror(expr) | sum(expr, expr)
KnotComplex resolve_library_expr(std::string_view expr);

// "lib:<expr>" resolves against the library; anything else is read as a file.
KnotComplex resolve_input(const std::string& arg);

// Positive-twist designations shipped with the library.  The checker verifies
// the monotonicity that a designation asserts; the shipped set is empty since
// no built-in pair is certified twist-related.
struct TwistDesignation {
    std::string source;  // twisting this ...
    std::string result;  // ... yields this
};
const std::vector<TwistDesignation>& twist_designations();
bool twist_designation_consistent(const KnotComplex& source, const KnotComplex& result);

}  // namespace knottrace
