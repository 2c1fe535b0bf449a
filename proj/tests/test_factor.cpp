#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>

#include "gk/data_path.hpp"
#include "gk/errors.hpp"
#include "gk/factor.hpp"

using namespace gk;

TEST_CASE("is_prime basics") {
    CHECK(is_prime(Natural(127)));
    CHECK_FALSE(is_prime(Natural(2047))); // 23 * 89
    CHECK_FALSE(is_prime(Natural(1)));
    CHECK_FALSE(is_prime(Natural(0ul)));
    CHECK(is_prime(Natural(2)));
    CHECK(is_prime(mersenne(61)));
    CHECK(is_prime(mersenne(89)));  // > 2^64, probabilistic path
    CHECK(is_prime(mersenne(127)));
    CHECK_FALSE(is_prime(mersenne(101)));
}

TEST_CASE("factor examples") {
    Factorization f = factor(Natural(2047));
    CHECK(f.str() == "23*89");
    CHECK(factor(Natural(63)).str() == "3^2*7");
    CHECK(factor(Natural(1)).empty());
    CHECK_THROWS_AS(factor(Natural(0ul)), domain_error);
}

TEST_CASE("factor of 2^29-1 matches a small trial-division oracle") {
    // oracle: divide by every integer up to 10^4
    Natural n = mersenne(29);
    unsigned long rest = n.to_ulong();
    std::vector<unsigned long> oracle;
    for (unsigned long d = 2; d <= 10000; ++d)
        while (rest % d == 0) {
            oracle.push_back(d);
            rest /= d;
        }
    if (rest > 1) oracle.push_back(rest);
    CHECK(oracle == std::vector<unsigned long>{233, 1103, 2089});
    CHECK(factor(n).str() == "233*1103*2089");
}

TEST_CASE("factor agrees with a sieve oracle") {
    const unsigned long limit = 20000;
    std::vector<unsigned long> spf(limit + 1, 0);
    for (unsigned long i = 2; i <= limit; ++i)
        if (spf[i] == 0)
            for (unsigned long j = i; j <= limit; j += i)
                if (spf[j] == 0) spf[j] = i;
    auto oracle = [&](unsigned long n) {
        Factorization f;
        while (n > 1) {
            unsigned long p = spf[n];
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.mul_prime(Natural(p), e);
        }
        return f;
    };
    for (unsigned long n = 1; n <= 2000; ++n) CHECK(factor(Natural(n)) == oracle(n));
    std::mt19937 rng(4242);
    std::uniform_int_distribution<unsigned long> dist(2, limit);
    for (int i = 0; i < 2000; ++i) {
        unsigned long n = dist(rng);
        CHECK(factor(Natural(n)) == oracle(n));
    }
}

TEST_CASE("factor reconstructs 2^k-1 for k <= 40 without a cache") {
    for (unsigned k = 2; k <= 40; ++k) {
        Factorization f = factor(mersenne(k));
        CHECK(f.value() == mersenne(k));
        for (const auto& pp : f.prime_powers()) CHECK(is_prime(pp.prime));
    }
}

TEST_CASE("lucas_lehmer") {
    CHECK(lucas_lehmer(13));
    CHECK_FALSE(lucas_lehmer(11));
    CHECK(lucas_lehmer(61));
    CHECK_THROWS_AS(lucas_lehmer(2), domain_error);
    CHECK_THROWS_AS(lucas_lehmer(9), domain_error);
}

TEST_CASE("lucas_lehmer agrees with is_prime for odd primes up to 127") {
    for (unsigned long p = 3; p <= 127; p += 2)
        if (is_prime(Natural(p))) CHECK(lucas_lehmer(p) == is_prime(mersenne(p)));
}

TEST_CASE("shipped factor cache loads and verifies") {
    FactorCache cache = cache_load(data_file("mersenne_factors.txt"));
    CHECK(cache.size() == 126); // k = 2..127
    REQUIRE(cache.find(11));
    CHECK(cache.find(11)->str() == "23*89");
    REQUIRE(cache.find(127));
    CHECK(cache.find(127)->value() == mersenne(127));
    CHECK(cache.find(1) == nullptr);
    // the cache answers factor() directly
    CHECK(factor(mersenne(101), &cache).str() == "7432339208719*341117531003194129");
}

TEST_CASE("cache round trip and file format errors") {
    std::string tmp = "/tmp/gk_cache_test.txt";
    {
        FactorCache c;
        c.insert(6, Factorization::parse("3^2*7"));
        c.insert(11, Factorization::parse("23*89"));
        cache_store(c, tmp);
        FactorCache back = cache_load(tmp);
        CHECK(back == c);
        REQUIRE(back.find(6));
        CHECK(back.find(6)->str() == "3^2*7");
    }
    auto write_and_load = [&](const std::string& content) {
        std::ofstream out(tmp, std::ios::binary);
        out << content;
        out.close();
        return cache_load(tmp);
    };
    CHECK(write_and_load("").size() == 0);                       // empty file
    CHECK(write_and_load("# comment only\n").size() == 0);
    CHECK(write_and_load("11 23^1 89^1\n").find(11) != nullptr);
    CHECK(write_and_load("6 3^2 7^1\n").find(6) != nullptr);
    CHECK_THROWS_AS(write_and_load("11 23 89\n"), parse_error);       // missing ^e
    CHECK_THROWS_AS(write_and_load("11 89^1 23^1\n"), parse_error);   // not ascending
    CHECK_THROWS_AS(write_and_load("x 23^1\n"), parse_error);
    CHECK_THROWS_AS(write_and_load("11 23^1 89^1 \n"), parse_error);  // trailing space
    CHECK_THROWS_AS(write_and_load("11 23^1 89^1\r\n"), parse_error); // CRLF
    CHECK_THROWS_AS(write_and_load("4 3^1 7^1\n"), integrity_error);  // 21 != 15
    CHECK_THROWS_AS(write_and_load("4 15^1\n"), integrity_error);     // 15 not prime
    CHECK_THROWS_AS(write_and_load("6 3^2 7^1\n6 3^2 7^1\n"), parse_error); // duplicate k
    try {
        write_and_load("6 3^2 7^1\nbroken line\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
    std::remove(tmp.c_str());
}
