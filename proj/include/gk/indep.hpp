#pragma once

#include <vector>

#include "gk/gkgraph.hpp"
#include "gk/natural.hpp"

namespace gk {

// Exact nonnegative rational in lowest terms.
struct BoundValue {
    Natural numerator;
    Natural denominator{1};

    bool operator==(const BoundValue& o) const {
        return numerator == o.numerator && denominator == o.denominator;
    }
    // this <= a/b
    bool leq(const Natural& a, const Natural& b) const { return numerator * b <= a * denominator; }
    // a/b <= this
    bool geq(const Natural& a, const Natural& b) const { return a * denominator <= numerator * b; }
    std::string str() const { return numerator.str() + "/" + denominator.str(); }
};

// Caro-Wei lower bound on the independence number: sum over vertices of
// 1/(1 + deg(v)), as an exact rational.
BoundValue caro_wei(const DegreePattern& d);

struct IndependentSetResult {
    unsigned size = 0;
    std::vector<Natural> witness; // ascending
};

// Maximum independent set by branch and bound over bit-packed adjacency
// (needs <= 64 vertices). The witness is canonical: the lexicographically
// smallest maximum independent set when vertices are ordered by
// (degree, prime) ascending.
IndependentSetResult alpha_exact(const PrimeGraph& g);

// Same, restricted to independent sets containing the vertex 2.
IndependentSetResult t2(const PrimeGraph& g);

// true iff the non-ascending sort of d1 is entrywise <= that of d2.
bool majorized(const DegreePattern& d1, const DegreePattern& d2);

} // namespace gk
