#pragma once

#include <vector>

#include "gk/factor.hpp"
#include "gk/natural.hpp"

namespace gk {

// Least k >= 1 with 2^k == 1 (mod p), for an odd prime p. Factors p - 1 and
// descends through its divisors; the cache resolves 2^j - 1 cofactors that
// show up while factoring p - 1.
Natural mult_order_of_2(const Natural& p, const FactorCache* cache = nullptr);

// Primes p with ord_p(2) = k, i.e. p | 2^k - 1 but p | 2^j - 1 for no j < k.
// Empty exactly for k in {1, 6}.
struct PpdSet {
    unsigned k = 0;
    std::vector<Natural> primes; // ascending
};

PpdSet ppd_set(unsigned k, const FactorCache* cache = nullptr);

// All prime divisors of 2^k - 1, ascending. Requires k >= 2.
std::vector<Natural> pi_of_mersenne(unsigned k, const FactorCache* cache = nullptr);

} // namespace gk
