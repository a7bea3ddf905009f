#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knottrace/errors.hpp"

namespace knottrace {

// A bigraded chain complex over GF(2) with finitely many generators, each
// carrying an Alexander grading A and a Maslov grading M.  An arrow x -> y
// stands for a term of the differential; the power of the formal variable is
// not stored because the gradings force it:
//
//     i-drop  a(x,y) = (M(y) - M(x) + 1) / 2
//     j-drop  d(x,y) = a(x,y) + A(x) - A(y)
//
// Both drops must be nonnegative integers.  Validation further requires
// d^2 = 0, symmetry of the graded homology ranks under A <-> -A, and that the
// i = 0 subquotient has one-dimensional homology.
//
// Wire format (UTF-8 text, '#' starts a comment):
//     knot <name>
//     gen <id> A=<int> M=<int>
//     arr <from-id> <to-id>

struct GeneratorInfo {
    std::string id;
    int alexander = 0;
    int maslov = 0;
    bool operator==(const GeneratorInfo&) const = default;
};

class KnotComplex {
public:
    static KnotComplex parse(std::string_view text);
    static KnotComplex make(std::string name, std::vector<GeneratorInfo> generators,
                            std::set<std::pair<int, int>> arrows);

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(generators_.size()); }
    const std::vector<GeneratorInfo>& generators() const { return generators_; }
    const GeneratorInfo& generator(int k) const { return generators_[k]; }
    const std::set<std::pair<int, int>>& arrows() const { return arrows_; }
    int index_of(std::string_view id) const;  // -1 if absent

    int idrop(int from, int to) const {
        return (generators_[to].maslov - generators_[from].maslov + 1) / 2;
    }
    int jdrop(int from, int to) const {
        return idrop(from, to) + generators_[from].alexander - generators_[to].alexander;
    }

    // Homology ranks of the associated graded of the i = 0 subquotient,
    // keyed by Alexander grading; only nonzero entries are present.
    const std::map<int, int>& hfk_ranks() const { return hfk_ranks_; }
    int genus() const { return genus_; }

    // Same ids with both gradings negated and every arrow reversed.
    KnotComplex mirrored() const;

    // Graded tensor product; generator ids are "<id1>*<id2>".
    static KnotComplex connected_sum(const KnotComplex& a, const KnotComplex& b);

    std::string to_text() const;

private:
    KnotComplex() = default;
    void validate();

    std::string name_;
    std::vector<GeneratorInfo> generators_;
    std::set<std::pair<int, int>> arrows_;
    std::map<int, int> hfk_ranks_;
    int genus_ = 0;
};

enum class IsoCheck { Isomorphic, NotIsomorphic, Unsupported };

// Grading-preserving isomorphism test by enumerating bijections within each
// (A, M) class.  Unsupported when some class holds more than three generators.
IsoCheck isomorphic(const KnotComplex& a, const KnotComplex& b);

}  // namespace knottrace
