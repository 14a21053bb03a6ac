#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ntdiv::arith {

// Exact signed integer of unbounded magnitude. Everything in this library
// computes with this type; no rounding or overflow is ever observable.
using Integer = boost::multiprecision::cpp_int;

// p-adic exponent of an integer: the greatest e with p^e dividing it, which
// is infinite exactly for input 0. Infinite compares greater than every
// finite value and addition saturates, so inequalities such as
// e_p(z) <= e_p(x+y) + e_p(l) stay checkable on degenerate inputs.
class Valuation {
public:
    static Valuation finite(std::uint64_t e) { return Valuation(false, e); }
    static Valuation infinite() { return Valuation(true, 0); }

    bool is_infinite() const noexcept { return infinite_; }

    // Finite exponent; throws std::logic_error if the value is infinite.
    std::uint64_t exponent() const;

    // Decimal exponent, or "infinity".
    std::string to_string() const;

    friend bool operator==(const Valuation&, const Valuation&) noexcept = default;

    friend std::strong_ordering operator<=>(const Valuation& lhs, const Valuation& rhs) noexcept {
        if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ <=> rhs.infinite_;
        return lhs.exponent_ <=> rhs.exponent_;
    }

    // Saturating: infinite + anything = infinite.
    friend Valuation operator+(const Valuation& lhs, const Valuation& rhs) noexcept {
        if (lhs.infinite_ || rhs.infinite_) return infinite();
        return finite(lhs.exponent_ + rhs.exponent_);
    }

private:
    Valuation(bool inf, std::uint64_t e) : infinite_(inf), exponent_(e) {}

    bool infinite_;
    std::uint64_t exponent_;
};

// e_p(c). Rejects non-prime p; the sign of c is ignored.
Valuation valuation(const Integer& p, const Integer& c);

// Nonnegative greatest common divisor. (0, 0) is rejected.
Integer gcd(const Integer& a, const Integer& b);

// Exact deterministic primality test for n >= 0. Below 2^64 this is a
// Miller-Rabin round with a witness set proven complete for that range;
// above it falls back to trial division, so very large prime inputs are
// slow but never misclassified.
bool is_prime(const Integer& n);

// Least prime factor of n >= 2. Trial division; intended for desk-scale n.
Integer smallest_prime_factor(const Integer& n);

// Prime factorization of n >= 1 as ascending (prime, multiplicity) pairs.
std::vector<std::pair<Integer, unsigned>> factorize(Integer n);

// base^exp exactly. exp must be nonnegative and fit the platform word.
Integer ipow(const Integer& base, const Integer& exp);

// base^exp reduced to the canonical range [0, modulus). Negative bases are
// normalized first; the modulus may be arbitrarily large (e.g. 100^100).
Integer mod_pow(const Integer& base, const Integer& exp, const Integer& modulus);

// Least k >= 1 with u^k = 1 (mod p), for p prime; divides p - 1.
// Rejects p | u.
Integer multiplicative_order(const Integer& u, const Integer& p);

// v in [1, p) with u*v = 1 (mod p), for p prime. Rejects p | u.
Integer modular_inverse(const Integer& u, const Integer& p);

}  // namespace ntdiv::arith
