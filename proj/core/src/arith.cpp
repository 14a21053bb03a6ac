#include "ntdiv/arith.hpp"

#include <limits>
#include <stdexcept>

#include "word_arith.hpp"

namespace ntdiv::arith {

namespace {

using detail::mulmod;
using detail::powmod;
using detail::u64;

constexpr u64 kU64Max = std::numeric_limits<u64>::max();

constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Miller-Rabin with a witness set proven complete for n < 3.3 * 10^24,
// hence exact for the whole 64-bit range.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : kWitnesses) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

u64 smallest_prime_factor_u64(u64 n) {
    if (n % 2 == 0) return 2;
    if (n % 3 == 0) return 3;
    for (u64 d = 5; d <= n / d; d += 6) {
        if (n % d == 0) return d;
        if (n % (d + 2) == 0) return d + 2;
    }
    return n;
}

}  // namespace

std::uint64_t Valuation::exponent() const {
    if (infinite_) throw std::logic_error("Valuation: infinite value has no exponent");
    return exponent_;
}

std::string Valuation::to_string() const {
    return infinite_ ? "infinity" : std::to_string(exponent_);
}

Valuation valuation(const Integer& p, const Integer& c) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
    if (c == 0) return Valuation::infinite();
    Integer a = abs(c);
    std::uint64_t e = 0;
    if (p <= kU64Max && a <= kU64Max) {
        u64 pp = p.convert_to<u64>();
        u64 aa = a.convert_to<u64>();
        while (aa % pp == 0) {
            aa /= pp;
            ++e;
        }
        return Valuation::finite(e);
    }
    Integer q, r;
    for (;;) {
        boost::multiprecision::divide_qr(a, p, q, r);
        if (r != 0) break;
        a.swap(q);
        ++e;
    }
    return Valuation::finite(e);
}

Integer gcd(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0)
        throw std::invalid_argument("gcd: undefined for (0, 0)");
    return boost::multiprecision::gcd(abs(a), abs(b));
}

bool is_prime(const Integer& n) {
    if (n < 0) throw std::invalid_argument("is_prime: n must be nonnegative");
    if (n <= kU64Max) return is_prime_u64(n.convert_to<u64>());
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Integer d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Integer smallest_prime_factor(const Integer& n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_factor: n must be at least 2");
    if (n <= kU64Max) return Integer(smallest_prime_factor_u64(n.convert_to<u64>()));
    if (n % 2 == 0) return 2;
    if (n % 3 == 0) return 3;
    for (Integer d = 5; d * d <= n; d += 6) {
        if (n % d == 0) return d;
        if (n % (d + 2) == 0) return d + 2;
    }
    return n;
}

std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be at least 1");
    std::vector<std::pair<Integer, unsigned>> factors;
    while (n > 1) {
        Integer p = smallest_prime_factor(n);
        unsigned mult = 0;
        while (n % p == 0) {
            n /= p;
            ++mult;
        }
        factors.emplace_back(std::move(p), mult);
    }
    return factors;
}

Integer ipow(const Integer& base, const Integer& exp) {
    if (exp < 0) throw std::invalid_argument("ipow: exp must be nonnegative");
    if (exp > std::numeric_limits<unsigned>::max())
        throw std::invalid_argument("ipow: exp out of supported range");
    return boost::multiprecision::pow(base, exp.convert_to<unsigned>());
}

Integer mod_pow(const Integer& base, const Integer& exp, const Integer& modulus) {
    if (modulus < 1) throw std::invalid_argument("mod_pow: modulus must be at least 1");
    if (exp < 0) throw std::invalid_argument("mod_pow: exp must be nonnegative");
    if (modulus == 1) return 0;
    Integer b = base % modulus;
    if (b < 0) b += modulus;
    if (modulus <= kU64Max && exp <= kU64Max) {
        return Integer(powmod(b.convert_to<u64>(), exp.convert_to<u64>(),
                              modulus.convert_to<u64>()));
    }
    Integer r = 1;
    Integer e = exp;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = r * b % modulus;
        e >>= 1;
        if (e > 0) b = b * b % modulus;
    }
    return r;
}

Integer multiplicative_order(const Integer& u, const Integer& p) {
    if (p < 2 || !is_prime(p))
        throw std::invalid_argument("multiplicative_order: p must be prime");
    Integer r = u % p;
    if (r < 0) r += p;
    if (r == 0) throw std::invalid_argument("multiplicative_order: p divides u");
    Integer order = p - 1;
    for (const auto& [q, mult] : factorize(p - 1)) {
        for (unsigned i = 0; i < mult; ++i) {
            if (order % q != 0) break;
            Integer reduced = order / q;
            if (mod_pow(r, reduced, p) != 1) break;
            order = reduced;
        }
    }
    return order;
}

Integer modular_inverse(const Integer& u, const Integer& p) {
    if (p < 2 || !is_prime(p))
        throw std::invalid_argument("modular_inverse: p must be prime");
    Integer r = u % p;
    if (r < 0) r += p;
    if (r == 0) throw std::invalid_argument("modular_inverse: p divides u");
    // Extended Euclid on (r, p); only the Bezout coefficient of r is tracked.
    Integer r0 = r, r1 = p;
    Integer s0 = 1, s1 = 0;
    while (r1 != 0) {
        Integer q = r0 / r1;
        r0 -= q * r1;
        r0.swap(r1);
        s0 -= q * s1;
        s0.swap(s1);
    }
    Integer v = s0 % p;
    if (v < 0) v += p;
    return v;
}

}  // namespace ntdiv::arith
