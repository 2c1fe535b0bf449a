#include "gk/factorization.hpp"

#include <algorithm>

#include "gk/errors.hpp"

namespace gk {

void Factorization::mul_prime(const Natural& p, unsigned e) {
    if (e == 0) return;
    if (p < Natural(2)) throw domain_error("Factorization: prime must be >= 2");
    auto it = std::lower_bound(pps_.begin(), pps_.end(), p,
                               [](const PrimePower& pp, const Natural& q) { return pp.prime < q; });
    if (it != pps_.end() && it->prime == p)
        it->exponent += e;
    else
        pps_.insert(it, PrimePower{p, e});
}

Factorization Factorization::times(const Factorization& o) const {
    Factorization r = *this;
    for (const auto& pp : o.pps_) r.mul_prime(pp.prime, pp.exponent);
    return r;
}

Natural Factorization::value() const {
    Natural v(1);
    for (const auto& pp : pps_) v *= pow(pp.prime, pp.exponent);
    return v;
}

bool Factorization::divides(const Factorization& o) const {
    for (const auto& pp : pps_)
        if (pp.exponent > o.exponent_of(pp.prime)) return false;
    return true;
}

unsigned Factorization::exponent_of(const Natural& p) const {
    auto it = std::lower_bound(pps_.begin(), pps_.end(), p,
                               [](const PrimePower& pp, const Natural& q) { return pp.prime < q; });
    if (it != pps_.end() && it->prime == p) return it->exponent;
    return 0;
}

std::vector<Natural> Factorization::primes() const {
    std::vector<Natural> ps;
    ps.reserve(pps_.size());
    for (const auto& pp : pps_) ps.push_back(pp.prime);
    return ps;
}

std::string Factorization::str() const {
    if (pps_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < pps_.size(); ++i) {
        if (i) s += '*';
        s += pps_[i].prime.str();
        if (pps_[i].exponent > 1) s += '^' + std::to_string(pps_[i].exponent);
    }
    return s;
}

Factorization Factorization::parse(const std::string& text) {
    Factorization f;
    if (text == "1") return f;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find_first_of("*.", pos);
        if (end == std::string::npos) end = text.size();
        std::string part = text.substr(pos, end - pos);
        if (part.empty()) throw domain_error("Factorization: empty factor in '" + text + "'");
        std::size_t caret = part.find('^');
        std::string base = caret == std::string::npos ? part : part.substr(0, caret);
        unsigned exp = 1;
        if (caret != std::string::npos) {
            std::string es = part.substr(caret + 1);
            if (es.empty() || es.find_first_not_of("0123456789") != std::string::npos)
                throw domain_error("Factorization: bad exponent in '" + part + "'");
            exp = static_cast<unsigned>(std::stoul(es));
            if (exp == 0) throw domain_error("Factorization: zero exponent in '" + part + "'");
        }
        if (base.empty() || base.find_first_not_of("0123456789") != std::string::npos)
            throw domain_error("Factorization: bad prime in '" + part + "'");
        f.mul_prime(Natural(base), exp);
        pos = end + (end < text.size() ? 1 : 0);
    }
    return f;
}

} // namespace gk
