#include "ntdiv/lemmas.hpp"

#include <stdexcept>

namespace ntdiv::lemmas {

namespace {

void validate_premise(const LtePremise& pr) {
    if (pr.ell < 1) throw std::invalid_argument("lte: ell must be positive");
    if (pr.p < 2 || !arith::is_prime(pr.p))
        throw std::invalid_argument("lte: p must be prime");
    if (pr.x * pr.y % pr.p == 0)
        throw std::invalid_argument("lte: premise violated: p divides x*y");
    if ((pr.x - pr.y) % pr.p != 0)
        throw std::invalid_argument("lte: premise violated: p does not divide x - y");
}

}  // namespace

LteBranch lte_classify(const LtePremise& premise) {
    validate_premise(premise);
    if (premise.p >= 3 || premise.ell % 2 != 0 || (premise.x - premise.y) % 4 == 0)
        return LteBranch::odd_case;
    if (premise.p == 2 && premise.ell % 2 == 0 &&
        arith::valuation(2, premise.x - premise.y) == Valuation::finite(1))
        return LteBranch::even_two_case;
    return LteBranch::inapplicable;
}

Valuation lte_valuation(const LtePremise& premise) {
    LteBranch branch = lte_classify(premise);
    if (premise.x == premise.y)
        throw std::invalid_argument("lte: x = y is not allowed");
    switch (branch) {
        case LteBranch::odd_case:
            return arith::valuation(premise.p, premise.x - premise.y) +
                   arith::valuation(premise.p, premise.ell);
        case LteBranch::even_two_case:
            return arith::valuation(2, premise.x + premise.y) +
                   arith::valuation(2, premise.ell);
        case LteBranch::inapplicable:
            break;
    }
    throw std::logic_error("lte: valid premise classified as inapplicable");
}

Valuation lte_oracle(const LtePremise& premise) {
    if (premise.ell < 1) throw std::invalid_argument("lte_oracle: ell must be positive");
    if (premise.x == premise.y)
        throw std::invalid_argument("lte_oracle: x = y is not allowed");
    Integer diff = arith::ipow(premise.x, premise.ell) - arith::ipow(premise.y, premise.ell);
    return arith::valuation(premise.p, diff);
}

bool Lemma2Report::all_ok() const {
    if (!coprime_ok || !no_q_divides_difference || !even_case_ok) return false;
    for (const auto& br : odd_prime_branches) {
        if (!br.p_divides_x_plus_y || !br.ell_odd || !br.bound_holds) return false;
    }
    return true;
}

Lemma2Report lemma_divides_check(const Integer& x, const Integer& y,
                                 const Integer& z, const Integer& ell) {
    if (ell < 1) throw std::invalid_argument("lemma_divides_check: ell must be positive");
    if (z == 0) throw std::invalid_argument("lemma_divides_check: z must be nonzero");
    if (arith::gcd(x, y) != 1)
        throw std::invalid_argument("lemma_divides_check: x and y must be coprime");
    Integer xl = arith::ipow(x, ell);
    Integer yl = arith::ipow(y, ell);
    if ((xl + yl) % z != 0)
        throw std::invalid_argument("lemma_divides_check: z does not divide x^ell + y^ell");

    Lemma2Report report;
    report.coprime_ok = arith::gcd(x * y, z) == 1;

    // Checking the prime divisors of z suffices: a composite q >= 3 divides
    // the difference only if some prime divisor of it does.
    const Integer diff = xl - yl;
    const auto z_factors = arith::factorize(abs(z));
    report.no_q_divides_difference = true;
    for (const auto& [q, mult] : z_factors) {
        if (q >= 3 && diff % q == 0) {
            report.no_q_divides_difference = false;
            break;
        }
    }

    const bool ell_even = (ell % 2 == 0);
    report.even_case_ok = !(ell_even && z % 4 == 0);

    for (const auto& [p, mult] : z_factors) {
        if (p == 2) continue;
        if (ell % p != 0) continue;
        if (arith::gcd(ell, p - 1) != 1) continue;
        report.odd_prime_branches.push_back(OddPrimeBranch{
            p,
            (x + y) % p == 0,
            !ell_even,
            arith::valuation(p, z) <= arith::valuation(p, x + y) + arith::valuation(p, ell),
        });
    }
    return report;
}

std::optional<std::pair<Integer, Integer>> lemma2_solve(const Integer& z) {
    if (z < 0) throw std::invalid_argument("lemma2_solve: z must be nonnegative");
    if (z < 3) return std::nullopt;
    Integer half = arith::ipow(2, z - 2);
    return std::make_pair(half + 1, half - 1);
}

std::vector<std::pair<Integer, Integer>> lemma2_oracle(const Integer& z,
                                                       const Integer& bound) {
    if (z < 0) throw std::invalid_argument("lemma2_oracle: z must be nonnegative");
    if (bound < 0) throw std::invalid_argument("lemma2_oracle: bound must be nonnegative");
    const Integer target = arith::ipow(2, z);
    std::vector<std::pair<Integer, Integer>> found;
    for (Integer x = 1; x <= bound; x += 2) {
        Integer y_sq = x * x - target;
        if (y_sq < 1) continue;
        Integer y = boost::multiprecision::sqrt(y_sq);
        if (y % 2 != 0 && y * y == y_sq) found.emplace_back(x, y);
    }
    return found;
}

}  // namespace ntdiv::lemmas
