#pragma once

#include "gk/natural.hpp"

namespace gk {

// Largest power of p dividing n. Requires n >= 1 and p prime.
Natural p_part(const Natural& n, const Natural& p);

// Exponent form: p^valuation(n, p) == p_part(n, p).
unsigned valuation(const Natural& n, const Natural& p);

struct PPartIdentity {
    Natural lhs; // (q^m - 1)_p
    Natural rhs; // m_p * (q - 1)_p
    bool equal;
};

// Checks (q^m - 1)_p == m_p * (q - 1)_p for q > 1, m >= 1 and an odd prime p
// dividing q - 1. Holds for every valid input; returning equal=false would
// mean a broken p_part.
PPartIdentity verify_p_part_identity(const Natural& q, unsigned long m, const Natural& p);

} // namespace gk
