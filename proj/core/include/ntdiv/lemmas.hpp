#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ntdiv/arith.hpp"

namespace ntdiv::lemmas {

using arith::Integer;
using arith::Valuation;

// Shared hypotheses of the lifting-the-exponent lemma: ell >= 1, p prime,
// p not dividing x*y, and p | x - y. Violations are usage errors, reported
// by naming the failed hypothesis.
struct LtePremise {
    Integer x;
    Integer y;
    Integer ell;
    Integer p;
};

enum class LteBranch {
    odd_case,       // p >= 3, or ell odd, or 4 | x - y
    even_two_case,  // p = 2, ell even, e_2(x - y) = 1
    inapplicable,   // unreachable once the premise validates
};

LteBranch lte_classify(const LtePremise& premise);

// e_p(x^ell - y^ell) by the closed form: e_p(x-y) + e_p(ell) in the odd
// case, e_2(x+y) + e_2(ell) in the even-two case. Rejects x = y.
Valuation lte_valuation(const LtePremise& premise);

// The same quantity by exact expansion of x^ell - y^ell, making no use of
// the closed form. Needs only x != y, ell >= 1 and p prime.
Valuation lte_oracle(const LtePremise& premise);

// One record per odd prime p dividing both z and ell with gcd(ell, p-1) = 1.
struct OddPrimeBranch {
    Integer p;
    bool p_divides_x_plus_y;
    bool ell_odd;
    bool bound_holds;  // e_p(z) <= e_p(x+y) + e_p(ell)
};

// Conclusion checks for the divisibility lemma on z | x^ell + y^ell with
// gcd(x, y) = 1. Every field reflects an exact arithmetic check; a false
// field is a found counterexample, not a usage error.
struct Lemma2Report {
    bool coprime_ok = false;               // gcd(x*y, z) = 1
    bool no_q_divides_difference = false;  // no prime q >= 3 of z divides x^ell - y^ell
    bool even_case_ok = false;             // ell even implies 4 does not divide z
    std::vector<OddPrimeBranch> odd_prime_branches;

    bool all_ok() const;
};

Lemma2Report lemma_divides_check(const Integer& x, const Integer& y,
                                 const Integer& z, const Integer& ell);

// The unique pair of odd x > y >= 0 with x^2 - y^2 = 2^z, which exists iff
// z >= 3 and is (2^(z-2) + 1, 2^(z-2) - 1); nullopt for z < 3.
std::optional<std::pair<Integer, Integer>> lemma2_solve(const Integer& z);

// All odd pairs with 0 <= y < x <= bound and x^2 - y^2 = 2^z, found by
// direct search over x with no use of the closed form.
std::vector<std::pair<Integer, Integer>> lemma2_oracle(const Integer& z,
                                                       const Integer& bound);

}  // namespace ntdiv::lemmas
