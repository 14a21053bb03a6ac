#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ntdiv/arith.hpp"

using namespace ntdiv::arith;

namespace {

// Independent oracles. These deliberately take different routes than the
// library: the valuation oracle grows explicit powers of p instead of
// dividing, the gcd oracle enumerates common divisors, and the power oracle
// multiplies out base^exp before reducing.

std::uint64_t valuation_oracle(const Integer& p, const Integer& c) {
    Integer a = abs(c);
    std::uint64_t e = 0;
    Integer pw = p;
    while (a % pw == 0) {
        ++e;
        pw *= p;
    }
    return e;
}

long long gcd_oracle(long long a, long long b) {
    const long long aa = std::llabs(a);
    const long long bb = std::llabs(b);
    long long best = 1;
    for (long long d = 1; d <= std::max({aa, bb, 1LL}); ++d) {
        if (aa % d == 0 && bb % d == 0) best = d;
    }
    return best;
}

Integer mod_pow_oracle(const Integer& base, unsigned exp, const Integer& modulus) {
    Integer acc = 1;
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    Integer r = acc % modulus;
    if (r < 0) r += modulus;
    return r;
}

long long order_oracle(long long u, long long p) {
    long long acc = 1;
    for (long long k = 1;; ++k) {
        acc = acc * u % p;
        if (acc < 0) acc += p;
        if (acc == 1) return k;
    }
}

std::vector<int> spf_sieve(int limit) {
    std::vector<int> spf(limit + 1, 0);
    for (int i = 2; i <= limit; ++i) {
        if (spf[i] != 0) continue;
        for (long long j = i; j <= limit; j += i) {
            if (spf[j] == 0) spf[j] = i;
        }
    }
    return spf;
}

const std::vector<int> kPrimesTo200 = [] {
    std::vector<int> ps;
    for (int n = 2; n <= 200; ++n) {
        bool prime = true;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) prime = false;
        if (prime) ps.push_back(n);
    }
    return ps;
}();

}  // namespace

TEST_CASE("Valuation value type") {
    const Valuation three = Valuation::finite(3);
    const Valuation inf = Valuation::infinite();

    CHECK(three.exponent() == 3);
    CHECK(!three.is_infinite());
    CHECK(inf.is_infinite());
    CHECK_THROWS_AS(inf.exponent(), std::logic_error);

    CHECK(three.to_string() == "3");
    CHECK(inf.to_string() == "infinity");

    // Total order with infinity on top, saturating addition.
    CHECK(Valuation::finite(2) < three);
    CHECK(three < inf);
    CHECK(inf == Valuation::infinite());
    CHECK(three + Valuation::finite(4) == Valuation::finite(7));
    CHECK((three + inf).is_infinite());
    CHECK((inf + inf).is_infinite());
}

TEST_CASE("valuation basics") {
    CHECK(valuation(3, 54) == Valuation::finite(3));  // 54 = 2 * 3^3
    CHECK(valuation(5, 7) == Valuation::finite(0));
    CHECK(valuation(2, 0).is_infinite());
    CHECK(valuation(3, -54) == Valuation::finite(3));  // sign ignored
    CHECK(valuation(2, Integer(1) << 100) == Valuation::finite(100));

    CHECK_THROWS_AS(valuation(4, 10), std::invalid_argument);
    CHECK_THROWS_AS(valuation(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(valuation(-3, 10), std::invalid_argument);
}

TEST_CASE("valuation agrees with the power oracle") {
    for (int p : {2, 3, 5, 7}) {
        for (long long c = 1; c <= 1000000; ++c) {
            const Valuation got = valuation(p, c);
            const std::uint64_t want = valuation_oracle(p, c);
            if (got != Valuation::finite(want)) {
                CAPTURE(p);
                CAPTURE(c);
                REQUIRE(got == Valuation::finite(want));
            }
        }
    }
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int p : {11, 13, 37, 97, 9973}) {
        for (int i = 0; i < 20000; ++i) {
            const long long c = dist(rng);
            if (c == 0) continue;
            const Valuation got = valuation(p, c);
            const std::uint64_t want = valuation_oracle(p, c);
            if (got != Valuation::finite(want)) {
                CAPTURE(p);
                CAPTURE(c);
                REQUIRE(got == Valuation::finite(want));
            }
        }
    }
}

TEST_CASE("gcd basics") {
    CHECK(gcd(12, -18) == 6);
    CHECK(gcd(1, 0) == 1);
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(2, 1) == 1);
    CHECK_THROWS_AS(gcd(0, 0), std::invalid_argument);
}

TEST_CASE("gcd properties on [-100, 100]") {
    for (long long a = -100; a <= 100; ++a) {
        for (long long b = -100; b <= 100; ++b) {
            if (a == 0 && b == 0) continue;
            const Integer g = gcd(a, b);
            if (g != gcd(b, a) || g != gcd(-a, -b) || g != gcd_oracle(a, b) ||
                (a != 0 && a % g != 0) || (b != 0 && b % g != 0)) {
                CAPTURE(a);
                CAPTURE(b);
                REQUIRE(g == gcd(b, a));
                REQUIRE(g == gcd(-a, -b));
                REQUIRE(g == gcd_oracle(a, b));
                REQUIRE(a % g == 0);
                REQUIRE(b % g == 0);
            }
        }
    }
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK(!is_prime(0));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));  // 7 * 13
    CHECK(is_prime(2147483647));
    CHECK(is_prime((Integer(1) << 61) - 1));   // Mersenne prime
    CHECK(!is_prime((Integer(1) << 61) + 1));  // divisible by 3
    CHECK(!is_prime((Integer(1) << 64) + 1));  // 274177 * 67280421310721
    CHECK_THROWS_AS(is_prime(-5), std::invalid_argument);

    // Against trial division over a contiguous range.
    for (int n = 0; n <= 10000; ++n) {
        bool want = n >= 2;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) want = false;
        if (is_prime(n) != want) {
            CAPTURE(n);
            REQUIRE(is_prime(n) == want);
        }
    }
}

TEST_CASE("smallest_prime_factor") {
    CHECK(smallest_prime_factor(15) == 3);
    CHECK(smallest_prime_factor(7) == 7);
    CHECK(smallest_prime_factor(1024) == 2);
    CHECK(smallest_prime_factor((Integer(1) << 64) + 1) == 274177);
    CHECK_THROWS_AS(smallest_prime_factor(1), std::invalid_argument);
    CHECK_THROWS_AS(smallest_prime_factor(-4), std::invalid_argument);

    const auto sieve = spf_sieve(100000);
    for (int n = 2; n <= 100000; ++n) {
        if (smallest_prime_factor(n) != sieve[n]) {
            CAPTURE(n);
            REQUIRE(smallest_prime_factor(n) == sieve[n]);
        }
    }
}

TEST_CASE("factorize") {
    using Factors = std::vector<std::pair<Integer, unsigned>>;
    CHECK(factorize(360) == Factors{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(97) == Factors{{97, 1}});
    CHECK(factorize(1).empty());
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("ipow") {
    CHECK(ipow(2, 10) == 1024);
    CHECK(ipow(-3, 3) == -27);
    CHECK(ipow(0, 0) == 1);
    CHECK(ipow(10, 40) == Integer("10000000000000000000000000000000000000000"));
    CHECK_THROWS_AS(ipow(2, -1), std::invalid_argument);
}

TEST_CASE("mod_pow basics") {
    CHECK(mod_pow(2, 3, 9) == 8);
    CHECK(mod_pow(-1, 3, 9) == 8);
    CHECK(mod_pow(3, 2, 8) == 1);
    CHECK(mod_pow(5, 0, 7) == 1);
    CHECK(mod_pow(123, 456, 1) == 0);
    CHECK(mod_pow(0, 0, 5) == 1);
    CHECK_THROWS_AS(mod_pow(2, -1, 5), std::invalid_argument);
    CHECK_THROWS_AS(mod_pow(2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(mod_pow(2, 3, -7), std::invalid_argument);
}

TEST_CASE("mod_pow handles huge moduli exactly") {
    const Integer m = ipow(100, 100);
    CHECK(mod_pow(10, 200, ipow(10, 100)) == 0);
    CHECK(mod_pow(2, 3, m) == 8);
    // (m - 1)^2 = m^2 - 2m + 1 = 1 (mod m)
    CHECK(mod_pow(m - 1, 2, m) == 1);
    CHECK(mod_pow(-1, 101, m) == m - 1);
}

TEST_CASE("mod_pow agrees with the expand-then-reduce oracle") {
    const std::vector<Integer> moduli = [] {
        std::vector<Integer> ms;
        for (int m = 1; m <= 40; ++m) ms.push_back(m);
        ms.push_back(997);
        ms.push_back(1000000000);
        ms.push_back(999999937);
        ms.push_back(Integer(1) << 31);
        return ms;
    }();
    for (long long base = -20; base <= 20; ++base) {
        for (unsigned exp = 0; exp <= 64; ++exp) {
            for (const Integer& m : moduli) {
                const Integer got = mod_pow(base, exp, m);
                const Integer want = mod_pow_oracle(base, exp, m);
                if (got != want) {
                    CAPTURE(base);
                    CAPTURE(exp);
                    CAPTURE(m.str());
                    REQUIRE(got == want);
                }
                REQUIRE(got >= 0);
                REQUIRE(got < m);
            }
        }
    }
}

TEST_CASE("multiplicative_order basics") {
    CHECK(multiplicative_order(2, 7) == 3);   // 2, 4, 1
    CHECK(multiplicative_order(1, 5) == 1);
    CHECK(multiplicative_order(3, 7) == 6);
    CHECK(multiplicative_order(-1, 5) == 2);
    CHECK(multiplicative_order(10, 17) == 16);
    CHECK_THROWS_AS(multiplicative_order(14, 7), std::invalid_argument);
    CHECK_THROWS_AS(multiplicative_order(3, 15), std::invalid_argument);
}

TEST_CASE("multiplicative_order divides p - 1 and is minimal") {
    for (int p : kPrimesTo200) {
        for (long long u = 1; u < p; ++u) {
            const Integer ord = multiplicative_order(u, p);
            if ((p - 1) % ord != 0 || mod_pow(u, ord, p) != 1) {
                CAPTURE(p);
                CAPTURE(u);
                REQUIRE((p - 1) % ord == 0);
                REQUIRE(mod_pow(u, ord, p) == 1);
            }
            if (p <= 61) REQUIRE(ord == order_oracle(u, p));
        }
    }
}

TEST_CASE("modular_inverse") {
    CHECK(modular_inverse(3, 7) == 5);
    CHECK(modular_inverse(1, 13) == 1);
    CHECK(modular_inverse(6, 7) == 6);
    CHECK(modular_inverse(-2, 7) == 3);  // -2 = 5, 5 * 3 = 15 = 1 (mod 7)
    CHECK_THROWS_AS(modular_inverse(14, 7), std::invalid_argument);
    CHECK_THROWS_AS(modular_inverse(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(modular_inverse(3, 9), std::invalid_argument);

    for (int p : {2, 3, 5, 7, 11, 13, 97}) {
        for (long long u = 1; u < p; ++u) {
            const Integer v = modular_inverse(u, p);
            REQUIRE(v >= 1);
            REQUIRE(v < p);
            REQUIRE(u * v % p == 1);
        }
    }
}
