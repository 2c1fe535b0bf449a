#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk/gkgraph.hpp"
#include "gk/indep.hpp"
#include "gk/orders.hpp"

namespace gk {

// The pair (|G|, D(G)) that drives the candidate filter.
struct OdSignature {
    Factorization order;
    DegreePattern pattern; // aligned to ascending pi(order)
};

OdSignature signature_Ln2(unsigned n, const FactorCache* cache = nullptr);

// Exponents k in [2, n] for which (2^k - 1)^2 does not divide
// |Aut(L_n(2))|, by direct exact divisibility. Equals {n/2+1..n} for even
// n >= 12 and {(n-1)/2+1..n} for odd n >= 13.
std::vector<unsigned> mersenne_square_free_ks(unsigned n, const FactorCache* cache = nullptr);

// Degree multiset {n-2 repeated n-1 times, 0 once}: the pattern a
// Frobenius group with these order components would have.
bool frobenius_shape(const DegreePattern& d);

// Degrees split as (a-1) occurring a times and (b-1) occurring b times with
// a + b = n, a, b >= 1: the 2-Frobenius pattern of two complete components.
bool two_frobenius_shape(const DegreePattern& d);

// true iff some vertex is isolated and some vertex has degree i with
// 1 <= i <= |pi| - 3. Sufficient for non-solvability, not necessary; callers
// must not infer solvability from false.
bool nonsolvable_by_degrees(const DegreePattern& d);

struct OdCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct OdReport {
    OdSignature signature;
    std::vector<Natural> required_primes;
    std::vector<GroupOrderEntry> candidates;
    std::vector<OdCheck> checks;
    std::optional<GroupId> resolved; // set when exactly one candidate matches the full order
    std::string verdict;
};

// Candidate filter: enumerates simple groups with order dividing
// signature.order containing the required primes, and attaches the degree
// checks. With no explicit required set, uses the two lowest-degree odd
// vertices of the pattern.
OdReport od_filter(const OdSignature& sig, const std::vector<Natural>& required_primes,
                   const FactorCache* cache = nullptr);
OdReport od_filter(const OdSignature& sig, const FactorCache* cache = nullptr);

// Default required-prime rule, exposed for the CLI.
std::vector<Natural> default_required_primes(const DegreePattern& pattern);

std::string report_text(const OdReport& report);
std::string report_json(const OdReport& report);

} // namespace gk
