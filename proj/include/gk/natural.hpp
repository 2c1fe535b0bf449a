#pragma once

#include <gmpxx.h>

#include <string>

#include "gk/errors.hpp"

namespace gk {

// Arbitrary-precision nonnegative integer. All arithmetic is exact; equality
// is value equality. Subtraction below zero and division by zero throw.
class Natural {
public:
    Natural() : v_(0) {}
    Natural(unsigned long u) : v_(u) {}
    explicit Natural(const std::string& decimal) : v_(decimal, 10) {
        if (v_ < 0) throw domain_error("Natural: negative literal " + decimal);
    }
    static Natural from_mpz(mpz_class m) {
        if (m < 0) throw domain_error("Natural: negative value");
        Natural n;
        n.v_ = std::move(m);
        return n;
    }

    const mpz_class& mpz() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    bool is_even() const { return !is_odd(); }

    Natural operator+(const Natural& o) const { return from_mpz(v_ + o.v_); }
    Natural operator*(const Natural& o) const { return from_mpz(v_ * o.v_); }
    Natural operator-(const Natural& o) const {
        if (v_ < o.v_) throw domain_error("Natural: subtraction below zero");
        return from_mpz(v_ - o.v_);
    }
    Natural operator/(const Natural& o) const {
        if (o.is_zero()) throw domain_error("Natural: division by zero");
        return from_mpz(v_ / o.v_);
    }
    Natural operator%(const Natural& o) const {
        if (o.is_zero()) throw domain_error("Natural: modulo by zero");
        return from_mpz(v_ % o.v_);
    }
    Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
    Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }

    bool divisible_by(const Natural& d) const {
        if (d.is_zero()) return is_zero();
        return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
    }

    bool operator==(const Natural& o) const { return v_ == o.v_; }
    bool operator!=(const Natural& o) const { return v_ != o.v_; }
    bool operator<(const Natural& o) const { return v_ < o.v_; }
    bool operator<=(const Natural& o) const { return v_ <= o.v_; }
    bool operator>(const Natural& o) const { return v_ > o.v_; }
    bool operator>=(const Natural& o) const { return v_ >= o.v_; }

    std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }

    bool fits_ulong() const { return v_.fits_ulong_p(); }
    unsigned long to_ulong() const {
        if (!fits_ulong()) throw domain_error("Natural: value too large for unsigned long");
        return v_.get_ui();
    }

    std::string str() const { return v_.get_str(10); }

private:
    mpz_class v_;
};

inline Natural pow(const Natural& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exp);
    return Natural::from_mpz(r);
}

// 2^k - 1
inline Natural mersenne(unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return Natural::from_mpz(r - 1);
}

inline Natural gcd(const Natural& a, const Natural& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Natural::from_mpz(r);
}

inline Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus) {
    if (modulus < Natural(2)) throw domain_error("mod_pow: modulus must be >= 2");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.mpz().get_mpz_t(), exp.mpz().get_mpz_t(),
             modulus.mpz().get_mpz_t());
    return Natural::from_mpz(r);
}

} // namespace gk
