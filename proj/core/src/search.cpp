#include "ntdiv/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <iterator>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "word_arith.hpp"

namespace ntdiv::search {

namespace {

using detail::powmod;
using detail::u64;
using i64 = std::int64_t;

constexpr u64 kWordCap = u64(1) << 62;

u64 residue(const Integer& v, u64 m) {
    Integer t = v % m;
    if (t < 0) t += m;
    return t.convert_to<u64>();
}

// Largest j <= k with n^j <= kWordCap, and n^j itself; j = 0 when even n^1
// does not fit. Requires n >= 2.
std::pair<unsigned, u64> max_word_power(const Integer& n, const Integer& k) {
    if (n > kWordCap) return {0, 0};
    const u64 nn = n.convert_to<u64>();
    u64 m = 1;
    unsigned j = 0;
    while (k > j && m <= kWordCap / nn) {
        m *= nn;
        ++j;
    }
    return {j, m};
}

i64 window_bound(const Integer& v, const char* what) {
    if (v < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
    if (v > (Integer(1) << 40))
        throw std::invalid_argument(std::string(what) + " out of supported range");
    return v.convert_to<i64>();
}

// Evaluates fixed contiguous blocks of [lo, hi] on `jobs` workers and
// concatenates the per-block results in block order, so the output does not
// depend on the schedule or on jobs.
template <typename T, typename BlockFn>
std::vector<T> run_blocks(i64 lo, i64 hi, unsigned jobs, BlockFn block_fn) {
    std::vector<T> out;
    if (lo > hi) return out;
    const u64 total = static_cast<u64>(hi - lo + 1);
    const u64 block = std::clamp<u64>(total / (u64(jobs) * 8) + 1, 1, 4096);
    const std::size_t nblocks = static_cast<std::size_t>((total + block - 1) / block);
    std::vector<std::vector<T>> results(nblocks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        try {
            for (std::size_t i = next.fetch_add(1); i < nblocks; i = next.fetch_add(1)) {
                const i64 blk_lo = lo + static_cast<i64>(i * block);
                const i64 blk_hi = std::min<i64>(hi, blk_lo + static_cast<i64>(block) - 1);
                block_fn(blk_lo, blk_hi, results[i]);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (error) std::rethrow_exception(error);

    std::size_t count = 0;
    for (const auto& r : results) count += r.size();
    out.reserve(count);
    for (auto& r : results)
        out.insert(out.end(), std::make_move_iterator(r.begin()),
                   std::make_move_iterator(r.end()));
    return out;
}

unsigned checked_jobs(unsigned jobs) {
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    return jobs;
}

enum class Quantifier { theorem_i, theorem_ii };

TheoremReport verify_theorem(Quantifier which, const SearchWindow& w, bool relaxed,
                             unsigned jobs) {
    checked_jobs(jobs);
    const i64 a_max = window_bound(w.a_max, "a_max");
    const i64 n_max = window_bound(w.n_max, "n_max");
    const Sign sign = which == Quantifier::theorem_i ? Sign::plus : Sign::minus;
    const TheoremPart part =
        which == Quantifier::theorem_i ? TheoremPart::part_i : TheoremPart::part_ii;

    auto block_fn = [&](i64 lo, i64 hi, std::vector<Triple>& out) {
        for (i64 n = lo; n <= hi; ++n) {
            const bool n_even = n % 2 == 0;
            for (i64 a = 1; a <= a_max; ++a) {
                const i64 b_lo = n_even ? 0 : -a;
                for (i64 b = b_lo; b <= a; ++b) {
                    // beta = -alpha iff b = -a, beta = alpha iff b = a.
                    if (which == Quantifier::theorem_i && !n_even && b == -a) continue;
                    if (which == Quantifier::theorem_ii && b == a) continue;
                    if (!divides_signed_power({a, b, n, a, sign})) continue;
                    Integer delta = arith::gcd(a, b);
                    Integer alpha = Integer(a) / delta;
                    Integer beta = Integer(b) / delta;
                    if (!relaxed &&
                        !divides_signed_power({alpha, beta, n, alpha, sign}))
                        continue;
                    out.push_back(Triple{a, b, n, std::move(delta), std::move(alpha),
                                         std::move(beta), part});
                }
            }
        }
    };

    TheoremReport report;
    report.window = w;
    report.relaxed = relaxed;
    report.triples = run_blocks<Triple>(2, n_max, jobs, block_fn);
    return report;
}

}  // namespace

std::string to_string(Sign sign) { return sign == Sign::plus ? "plus" : "minus"; }

bool divides_signed_power(const SignedPower& q) {
    if (q.n < 1) throw std::invalid_argument("divides_signed_power: n must be at least 1");
    if (q.k < 0) throw std::invalid_argument("divides_signed_power: k must be nonnegative");
    if (q.n == 1 || q.k == 0) return true;

    // Word-sized screen: if some partial power n^j already fails to divide,
    // n^k cannot divide either.
    const auto [j, m_word] = max_word_power(q.n, q.k);
    if (j > 0) {
        const u64 n_word = q.n.convert_to<u64>();
        const u64 ra = powmod(residue(q.a, m_word), n_word, m_word);
        const u64 rb = powmod(residue(q.b, m_word), n_word, m_word);
        const u64 rem =
            q.sign == Sign::plus ? (ra + rb) % m_word : (ra + m_word - rb) % m_word;
        if (rem != 0) return false;
        if (q.k == j) return true;
    }

    const Integer modulus = arith::ipow(q.n, q.k);
    const Integer ra = arith::mod_pow(q.a, q.n, modulus);
    const Integer rb = arith::mod_pow(q.b, q.n, modulus);
    Integer rem = q.sign == Sign::plus ? Integer((ra + rb) % modulus)
                                       : Integer((ra - rb) % modulus);
    if (rem < 0) rem += modulus;
    return rem == 0;
}

RSetReport rset_enumerate(const Integer& a, const Integer& b, const Integer& k,
                          Sign sign, const Integer& n_max, unsigned jobs) {
    checked_jobs(jobs);
    if (k < 0) throw std::invalid_argument("rset_enumerate: k must be nonnegative");
    const i64 hi = window_bound(n_max, "n_max");

    auto block_fn = [&](i64 lo, i64 blk_hi, std::vector<Integer>& out) {
        for (i64 n = lo; n <= blk_hi; ++n) {
            if (divides_signed_power({a, b, n, k, sign})) out.emplace_back(n);
        }
    };

    RSetReport report;
    report.a = a;
    report.b = b;
    report.k = k;
    report.sign = sign;
    report.n_max = n_max;
    report.elements = run_blocks<Integer>(1, hi, jobs, block_fn);
    report.complete_up_to = n_max;
    return report;
}

TheoremReport verify_theorem1_part_i(const SearchWindow& w, bool relaxed, unsigned jobs) {
    return verify_theorem(Quantifier::theorem_i, w, relaxed, jobs);
}

TheoremReport verify_theorem1_part_ii(const SearchWindow& w, bool relaxed, unsigned jobs) {
    return verify_theorem(Quantifier::theorem_ii, w, relaxed, jobs);
}

CorollaryReport verify_corollary(const SearchWindow& w, unsigned jobs) {
    checked_jobs(jobs);
    const i64 m_max = window_bound(w.m_max, "m_max");
    const i64 n_max = window_bound(w.n_max, "n_max");

    auto block_fn = [&](i64 lo, i64 hi, std::vector<CorollaryPair>& out) {
        for (i64 n = lo; n <= hi; ++n) {
            for (i64 m = 1; m <= m_max; ++m) {
                if (divides_signed_power({m, 1, n, m, Sign::plus}))
                    out.push_back(CorollaryPair{m, n});
            }
        }
    };

    CorollaryReport report;
    report.window = w;
    report.pairs = run_blocks<CorollaryPair>(2, n_max, jobs, block_fn);
    return report;
}

FinitenessReport finiteness_report(const Integer& a, const Integer& b,
                                   const Integer& k, const Integer& n_max,
                                   unsigned jobs) {
    if (arith::gcd(a, b) != 1)
        throw std::invalid_argument("finiteness_report: a and b must be coprime");
    if (abs(a * b) < 2)
        throw std::invalid_argument("finiteness_report: requires |a*b| >= 2");
    if (k < 3) throw std::invalid_argument("finiteness_report: requires k >= 3");

    FinitenessReport report{
        rset_enumerate(a, b, k, Sign::plus, n_max, jobs),
        rset_enumerate(a, b, k, Sign::minus, n_max, jobs),
        1,
    };
    // Both element lists contain 1, so back() is well defined.
    report.largest_element =
        std::max(report.plus.elements.back(), report.minus.elements.back());
    return report;
}

}  // namespace ntdiv::search
