#pragma once

#include <map>
#include <optional>
#include <string>

#include "gk/factorization.hpp"
#include "gk/natural.hpp"

namespace gk {

// Deterministic for n < 2^64 (fixed witness set 2..37). Beyond that,
// Miller-Rabin with 64 rounds of bases drawn from a fixed-seed generator, so
// the answer is identical run to run.
bool is_prime(const Natural& n);

// All primes below 10^6 (the trial-division bound), ascending.
const std::vector<unsigned long>& small_primes();

// Verified factorizations of 2^k - 1, keyed by exponent k >= 2.
class FactorCache {
public:
    FactorCache() = default;

    void insert(unsigned k, Factorization f); // verifies reconstruction + primality
    const Factorization* find(unsigned k) const;
    std::size_t size() const { return entries_.size(); }
    const std::map<unsigned, Factorization>& entries() const { return entries_; }
    const std::string& source_path() const { return source_path_; }

    bool operator==(const FactorCache& o) const { return entries_ == o.entries_; }

private:
    friend FactorCache cache_load(const std::string& path);
    std::map<unsigned, Factorization> entries_;
    std::string source_path_;
};

// Complete prime factorization of n >= 1. Trial division by primes below
// 10^6, then Brent-cycle Pollard rho; a value of the form 2^k - 1 is answered
// from the cache when one is supplied (and so are 2^k - 1 cofactors that
// appear mid-recursion). Throws incomplete_factorization instead of ever
// returning a composite as prime.
Factorization factor(const Natural& n, const FactorCache* cache = nullptr);

// true iff 2^p - 1 is prime, for odd prime p (s_0 = 4, s_{i+1} = s_i^2 - 2).
bool lucas_lehmer(unsigned long p);

// File format, one entry per line: "<k> <p1>^<e1> <p2>^<e2> ..." with primes
// ascending and exponents always written; '#' starts a comment line; LF only.
// Every loaded entry is re-verified.
FactorCache cache_load(const std::string& path);
void cache_store(const FactorCache& cache, const std::string& path);

} // namespace gk
