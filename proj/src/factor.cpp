#include "gk/factor.hpp"

#include <algorithm>
#include <fstream>
#include <vector>

#include "gk/errors.hpp"

namespace gk {

namespace {

constexpr unsigned long kTrialDivisionBound = 1000000; // fixed, documented
constexpr unsigned long kRhoBudget = 1ul << 27;        // Brent steps per composite
constexpr int kMillerRabinRounds = 64;                 // beyond 2^64
constexpr unsigned long kMillerRabinSeed = 0x5eed5eedul;

} // namespace

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialDivisionBound + 1, false);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i <= kTrialDivisionBound; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j <= kTrialDivisionBound; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

namespace {

bool miller_rabin_witness(const mpz_class& n, const mpz_class& nm1, const mpz_class& d,
                          unsigned long s, const mpz_class& a) {
    if (a % n == 0) return true;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
    }
    return false;
}

} // namespace

bool is_prime(const Natural& num) {
    const mpz_class& n = num.mpz();
    if (n < 2) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    mpz_class nm1 = n - 1;
    mpz_class d = nm1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    // Deterministic witness set, sufficient for all n < 3.3 * 10^24 > 2^64.
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul})
            if (!miller_rabin_witness(n, nm1, d, s, mpz_class(a))) return false;
        return true;
    }

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(kMillerRabinSeed);
    for (int round = 0; round < kMillerRabinRounds; ++round) {
        mpz_class a = rng.get_z_range(nm1 - 2) + 2;
        if (!miller_rabin_witness(n, nm1, d, s, a)) return false;
    }
    return true;
}

namespace {

// Brent's variant: cycle x -> x^2 + c, gcds batched 128 at a time.
mpz_class rho_brent(const mpz_class& n, unsigned long c, unsigned long max_steps,
                    unsigned long& steps_used) {
    mpz_class y = 2, q = 1, g = 1, x, ys;
    const unsigned long batch = 128;
    unsigned long r = 1;
    bool started = false;
    while (g == 1 && steps_used < max_steps) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        steps_used += r;
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            started = true;
            unsigned long limit = std::min(batch, r - k);
            for (unsigned long i = 0; i < limit; ++i) {
                y = (y * y + c) % n;
                q = q * (x > y ? x - y : y - x) % n;
            }
            steps_used += limit;
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += limit;
        }
        r *= 2;
    }
    if (g == n && started) {
        // a batch overshot the collision; replay it one gcd at a time
        unsigned long guard = 0;
        do {
            ys = (ys * ys + c) % n;
            mpz_class diff = x > ys ? x - ys : ys - x;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1 && ++guard <= batch);
    }
    return g;
}

std::optional<unsigned> mersenne_exponent_of(const mpz_class& n) {
    mpz_class np1 = n + 1;
    if (mpz_popcount(np1.get_mpz_t()) != 1) return std::nullopt;
    return static_cast<unsigned>(mpz_sizeinbase(np1.get_mpz_t(), 2) - 1);
}

void factor_into(const mpz_class& n, const FactorCache* cache, Factorization& out) {
    if (n == 1) return;
    if (cache) {
        if (auto k = mersenne_exponent_of(n); k && *k >= 2) {
            if (const Factorization* hit = cache->find(*k)) {
                out = out.times(*hit);
                return;
            }
        }
    }
    if (is_prime(Natural::from_mpz(n))) {
        out.mul_prime(Natural::from_mpz(n), 1);
        return;
    }
    mpz_class rest = n;
    for (unsigned long p : small_primes()) {
        if (mpz_class(p) * p > rest) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e) out.mul_prime(Natural(p), e);
        if (rest == 1) return;
    }
    if (rest == 1) return;
    if (cache) {
        if (auto k = mersenne_exponent_of(rest); k && *k >= 2) {
            if (const Factorization* hit = cache->find(*k)) {
                out = out.times(*hit);
                return;
            }
        }
    }
    if (is_prime(Natural::from_mpz(rest))) {
        out.mul_prime(Natural::from_mpz(rest), 1);
        return;
    }
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
        factor_into(root, cache, out);
        factor_into(root, cache, out);
        return;
    }
    unsigned long steps = 0;
    for (unsigned long c = 1; steps < kRhoBudget; ++c) {
        mpz_class g = rho_brent(rest, c, kRhoBudget - steps, steps);
        if (g > 1 && g < rest) {
            factor_into(g, cache, out);
            factor_into(rest / g, cache, out);
            return;
        }
    }
    throw incomplete_factorization(rest.get_str());
}

} // namespace

Factorization factor(const Natural& n, const FactorCache* cache) {
    if (n.is_zero()) throw domain_error("factor: n must be >= 1");
    Factorization f;
    factor_into(n.mpz(), cache, f);
    return f;
}

bool lucas_lehmer(unsigned long p) {
    if (p == 2) throw domain_error("lucas_lehmer: p = 2 handled by table");
    if (!is_prime(Natural(p)) || p % 2 == 0) throw domain_error("lucas_lehmer: p must be an odd prime");
    mpz_class m = (mpz_class(1) << p) - 1;
    mpz_class s = 4;
    for (unsigned long i = 0; i + 2 < p; ++i) {
        s = s * s - 2;
        if (s < 0) s += m;
        // reduce mod 2^p - 1 via shift/add
        while (mpz_sizeinbase(s.get_mpz_t(), 2) > p) {
            mpz_class high = s >> p;
            mpz_class low = s - (high << p);
            s = high + low;
        }
        if (s == m) s = 0;
    }
    return s == 0;
}

void FactorCache::insert(unsigned k, Factorization f) {
    if (k < 2) throw domain_error("FactorCache: k must be >= 2");
    if (f.value() != mersenne(k))
        throw integrity_error("FactorCache: entry for k = " + std::to_string(k) +
                              " does not reconstruct 2^" + std::to_string(k) + " - 1");
    for (const auto& pp : f.prime_powers())
        if (!is_prime(pp.prime))
            throw integrity_error("FactorCache: entry for k = " + std::to_string(k) +
                                  " lists non-prime " + pp.prime.str());
    entries_[k] = std::move(f);
}

const Factorization* FactorCache::find(unsigned k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? nullptr : &it->second;
}

FactorCache cache_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cache_load: cannot open " + path, 0);
    FactorCache cache;
    cache.source_path_ = path;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            throw parse_error("cache_load: CR line ending", lineno);
        if (line.empty() || line[0] == '#') continue;
        std::size_t pos = line.find(' ');
        if (pos == std::string::npos || pos == 0)
            throw parse_error("cache_load: expected '<k> <p>^<e> ...'", lineno);
        std::string kstr = line.substr(0, pos);
        if (kstr.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("cache_load: bad exponent field '" + kstr + "'", lineno);
        unsigned k = static_cast<unsigned>(std::stoul(kstr));
        Factorization f;
        Natural last_prime(0);
        std::size_t start = pos + 1;
        if (start >= line.size()) throw parse_error("cache_load: missing factor list", lineno);
        while (start < line.size()) {
            std::size_t end = line.find(' ', start);
            if (end == std::string::npos) end = line.size();
            std::string part = line.substr(start, end - start);
            std::size_t caret = part.find('^');
            if (caret == std::string::npos || caret == 0 || caret + 1 >= part.size())
                throw parse_error("cache_load: factor '" + part + "' is not <p>^<e>", lineno);
            std::string ps = part.substr(0, caret);
            std::string es = part.substr(caret + 1);
            if (ps.find_first_not_of("0123456789") != std::string::npos ||
                es.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("cache_load: factor '" + part + "' is not numeric", lineno);
            Natural p(ps);
            unsigned e = static_cast<unsigned>(std::stoul(es));
            if (e == 0) throw parse_error("cache_load: zero exponent", lineno);
            if (!(last_prime < p)) throw parse_error("cache_load: primes not ascending", lineno);
            last_prime = p;
            f.mul_prime(p, e);
            start = end + (end < line.size() ? 1 : 0);
            if (start == line.size() && line.back() == ' ')
                throw parse_error("cache_load: trailing space", lineno);
        }
        if (cache.find(k))
            throw parse_error("cache_load: duplicate entry for k = " + std::to_string(k), lineno);
        try {
            cache.insert(k, std::move(f));
        } catch (const domain_error& e) {
            throw parse_error(std::string("cache_load: ") + e.what(), lineno);
        }
    }
    return cache;
}

void cache_store(const FactorCache& cache, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cache_store: cannot open " + path, 0);
    for (const auto& [k, f] : cache.entries()) {
        out << k;
        for (const auto& pp : f.prime_powers()) out << ' ' << pp.prime.str() << '^' << pp.exponent;
        out << '\n';
    }
}

} // namespace gk
