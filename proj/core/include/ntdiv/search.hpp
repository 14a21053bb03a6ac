#pragma once

#include <string>
#include <vector>

#include "ntdiv/arith.hpp"

namespace ntdiv::search {

using arith::Integer;

enum class Sign { plus, minus };

// "plus"/"minus".
std::string to_string(Sign sign);

// The predicate instance (a, b, n, k, sign): does n^k divide a^n + b^n
// (plus) or a^n - b^n (minus)?
struct SignedPower {
    Integer a;
    Integer b;
    Integer n;  // >= 1
    Integer k;  // >= 0
    Sign sign = Sign::plus;
};

// Evaluated modularly: a^n and b^n are reduced mod n^k, never materialized.
// Exact for n^k of arbitrary size. Small moduli run entirely in machine
// words, and an oversized n^k is only touched after a word-sized partial
// power of n has failed to rule the candidate out.
bool divides_signed_power(const SignedPower& q);

enum class TheoremPart { part_i, part_ii };

// A solution (a, b, n) together with its normalization delta = gcd(a, b),
// alpha = a/delta, beta = b/delta (so gcd(alpha, beta) = 1).
struct Triple {
    Integer a;
    Integer b;
    Integer n;
    Integer delta;
    Integer alpha;
    Integer beta;
    TheoremPart part = TheoremPart::part_i;
};

// Bounds of an exhaustive search. m_max only applies to the corollary
// window. Reports carry their window, so "exactly these solutions" claims
// are always scoped to it.
struct SearchWindow {
    Integer a_max{1};
    Integer n_max{1};
    Integer m_max{1};
};

struct TheoremReport {
    SearchWindow window;
    bool relaxed = false;
    std::vector<Triple> triples;  // sorted by (n, a, b)
};

struct CorollaryPair {
    Integer m;
    Integer n;
};

struct CorollaryReport {
    SearchWindow window;
    std::vector<CorollaryPair> pairs;  // sorted by (n, m)
};

// Elements of R_k^sign(a, b) within [1, n_max]. complete_up_to records the
// window actually scanned; nothing is claimed beyond it.
struct RSetReport {
    Integer a;
    Integer b;
    Integer k;
    Sign sign = Sign::plus;
    Integer n_max;
    std::vector<Integer> elements;  // ascending; 1 is always a member
    Integer complete_up_to;
};

// All n in [1, n_max] with n^k | a^n ± b^n. The n-range may be evaluated on
// `jobs` worker threads; output is identical for every jobs value.
RSetReport rset_enumerate(const Integer& a, const Integer& b, const Integer& k,
                          Sign sign, const Integer& n_max, unsigned jobs = 1);

// Exhaustive window check of the classification of triples with
// n^a | a^n + b^n and n^alpha | alpha^n + beta^n, over 2 <= n <= n_max,
// 1 <= a <= a_max, |b| <= a, b >= 0 for n even, beta != -alpha for n odd.
// Expected within any window: (2,1,3) and (2^c, 2^c, 2) for c in {0,1,2}.
// relaxed drops the normalized condition n^alpha | alpha^n + beta^n; no
// fixed solution set is associated with that mode.
TheoremReport verify_theorem1_part_i(const SearchWindow& w, bool relaxed = false,
                                     unsigned jobs = 1);

// Same window shape for n^a | a^n - b^n and n^alpha | alpha^n - beta^n,
// with hypothesis beta != alpha. Expected: (3,1,2) and (2,-1,3).
TheoremReport verify_theorem1_part_ii(const SearchWindow& w, bool relaxed = false,
                                      unsigned jobs = 1);

// All (m, n) with 1 <= m <= m_max, 2 <= n <= n_max and n^m | m^n + 1.
// n = 1 is excluded (every m qualifies there). Expected: (2,3) and (1,2).
CorollaryReport verify_corollary(const SearchWindow& w, unsigned jobs = 1);

struct FinitenessReport {
    RSetReport plus;
    RSetReport minus;
    Integer largest_element;  // max over both element lists
};

// Both R-set windows for coprime a, b with |ab| >= 2 and k >= 3, the range
// in which the sets are conjectured finite. Violated hypotheses are named.
FinitenessReport finiteness_report(const Integer& a, const Integer& b,
                                   const Integer& k, const Integer& n_max,
                                   unsigned jobs = 1);

}  // namespace ntdiv::search
