#include "gk/arith.hpp"

#include "gk/errors.hpp"
#include "gk/factor.hpp"

namespace gk {

static void check_p_part_args(const Natural& n, const Natural& p) {
    if (n.is_zero()) throw domain_error("p_part: n must be >= 1");
    if (!is_prime(p)) throw domain_error("p_part: p = " + p.str() + " is not prime");
}

Natural p_part(const Natural& n, const Natural& p) {
    check_p_part_args(n, p);
    Natural part(1);
    Natural rest = n;
    while (rest.divisible_by(p)) {
        rest = rest / p;
        part *= p;
    }
    return part;
}

unsigned valuation(const Natural& n, const Natural& p) {
    check_p_part_args(n, p);
    unsigned v = 0;
    Natural rest = n;
    while (rest.divisible_by(p)) {
        rest = rest / p;
        ++v;
    }
    return v;
}

PPartIdentity verify_p_part_identity(const Natural& q, unsigned long m, const Natural& p) {
    if (q <= Natural(1)) throw domain_error("verify_p_part_identity: q must be > 1");
    if (m == 0) throw domain_error("verify_p_part_identity: m must be >= 1");
    if (p == Natural(2) || p.is_even()) throw domain_error("verify_p_part_identity: p must be odd");
    if (!is_prime(p)) throw domain_error("verify_p_part_identity: p is not prime");
    Natural qm1 = q - Natural(1);
    if (!qm1.divisible_by(p))
        throw precondition_error("verify_p_part_identity: p does not divide q - 1");
    PPartIdentity r;
    r.lhs = p_part(pow(q, m) - Natural(1), p);
    r.rhs = p_part(Natural(m), p) * p_part(qm1, p);
    r.equal = (r.lhs == r.rhs);
    return r;
}

} // namespace gk
