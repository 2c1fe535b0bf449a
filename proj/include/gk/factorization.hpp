#pragma once

#include <string>
#include <vector>

#include "gk/natural.hpp"

namespace gk {

struct PrimePower {
    Natural prime;
    unsigned exponent = 1;
    bool operator==(const PrimePower& o) const {
        return prime == o.prime && exponent == o.exponent;
    }
};

// Prime decomposition: primes strictly ascending, exponents >= 1.
// The empty factorization represents 1.
class Factorization {
public:
    Factorization() = default;

    // Merges p^e into the decomposition, keeping primes sorted.
    void mul_prime(const Natural& p, unsigned e);
    Factorization times(const Factorization& o) const;

    Natural value() const;
    bool divides(const Factorization& o) const;
    unsigned exponent_of(const Natural& p) const; // 0 when absent
    bool contains(const Natural& p) const { return exponent_of(p) > 0; }

    std::vector<Natural> primes() const;
    const std::vector<PrimePower>& prime_powers() const { return pps_; }
    std::size_t size() const { return pps_.size(); }
    bool empty() const { return pps_.empty(); }

    // "2^10*3^2*5*7*31"; "1" for the empty product.
    std::string str() const;
    // Inverse of str(); also accepts "." as the separator. Does not verify
    // primality of the parts; callers that need that re-check.
    static Factorization parse(const std::string& text);

    bool operator==(const Factorization& o) const { return pps_ == o.pps_; }
    bool operator!=(const Factorization& o) const { return pps_ != o.pps_; }

private:
    std::vector<PrimePower> pps_;
};

} // namespace gk
