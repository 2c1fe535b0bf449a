#include "gk/ppd.hpp"

#include "gk/errors.hpp"

namespace gk {

Natural mult_order_of_2(const Natural& p, const FactorCache* cache) {
    if (p == Natural(2) || p.is_even() || p < Natural(3))
        throw domain_error("mult_order_of_2: p must be an odd prime");
    Natural order = p - Natural(1);
    Factorization f = factor(order, cache);
    for (const auto& pp : f.prime_powers()) {
        for (unsigned e = 0; e < pp.exponent; ++e) {
            Natural reduced = order / pp.prime;
            if (mod_pow(Natural(2), reduced, p).is_one())
                order = reduced;
            else
                break;
        }
    }
    return order;
}

PpdSet ppd_set(unsigned k, const FactorCache* cache) {
    if (k == 0) throw domain_error("ppd_set: k must be >= 1");
    PpdSet s;
    s.k = k;
    if (k == 1) return s; // 2^1 - 1 = 1
    Natural kk(k);
    for (const Natural& p : pi_of_mersenne(k, cache))
        if (mult_order_of_2(p, cache) == kk) s.primes.push_back(p);
    if (s.primes.empty() && k != 6)
        throw integrity_error("ppd_set: unexpectedly empty for k = " + std::to_string(k));
    return s;
}

std::vector<Natural> pi_of_mersenne(unsigned k, const FactorCache* cache) {
    if (k < 2) throw domain_error("pi_of_mersenne: k must be >= 2");
    return factor(mersenne(k), cache).primes();
}

} // namespace gk
