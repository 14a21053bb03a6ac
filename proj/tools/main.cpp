// ntdiv: exact-arithmetic toolkit for the divisibility of a^n ± b^n by n^k.
//
// Exit codes: 0 success, 1 a verify subcommand found a deviation from the
// expected solution set, 2 usage error.

#include <unistd.h>

#include <array>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ntdiv/arith.hpp"
#include "ntdiv/lemmas.hpp"
#include "ntdiv/search.hpp"

namespace arith = ntdiv::arith;
namespace lemmas = ntdiv::lemmas;
namespace search = ntdiv::search;

using arith::Integer;
using arith::Valuation;
using nlohmann::json;
using search::Sign;

namespace {

enum class Format { text, jsonl, csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "jsonl") return Format::jsonl;
    if (s == "csv") return Format::csv;
    throw std::invalid_argument("--format: expected text, jsonl or csv");
}

// Arbitrary-precision decimal integer; a leading minus is the only accepted
// sign (no unary plus).
Integer parse_integer(const std::string& flag, const std::string& text) {
    bool ok = !text.empty();
    for (std::size_t i = 0; ok && i < text.size(); ++i) {
        const char ch = text[i];
        if (i == 0 && ch == '-' && text.size() > 1) continue;
        if (ch < '0' || ch > '9') ok = false;
    }
    if (!ok)
        throw std::invalid_argument(flag + ": expected a decimal integer, got '" + text + "'");
    return Integer(text);
}

Sign parse_sign(const std::string& text) {
    if (text == "plus") return Sign::plus;
    if (text == "minus") return Sign::minus;
    throw std::invalid_argument("--sign: expected 'plus' or 'minus', got '" + text + "'");
}

// Progress and summaries go to stderr and only when it is a terminal, so
// redirected output stays byte-stable.
void progress(const std::string& line) {
    if (isatty(2)) std::cerr << line << std::endl;
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

void emit_json(const json& j) { std::cout << j.dump() << '\n'; }

// ---- val ----

int run_val(const std::string& p_s, const std::string& c_s, Format fmt) {
    const Integer p = parse_integer("--p", p_s);
    const Integer c = parse_integer("--c", c_s);
    const Valuation v = arith::valuation(p, c);
    switch (fmt) {
        case Format::text:
            std::cout << v.to_string() << '\n';
            break;
        case Format::jsonl: {
            json j{{"p", p.str()}, {"c", c.str()}, {"infinite", v.is_infinite()}};
            j["e"] = v.is_infinite() ? json(nullptr) : json(std::to_string(v.exponent()));
            emit_json(j);
            break;
        }
        case Format::csv:
            std::cout << "p,c,e,infinite\n"
                      << p.str() << ',' << c.str() << ','
                      << (v.is_infinite() ? "" : std::to_string(v.exponent())) << ','
                      << bool_str(v.is_infinite()) << '\n';
            break;
    }
    return 0;
}

// ---- lte ----

std::string branch_name(lemmas::LteBranch b) {
    switch (b) {
        case lemmas::LteBranch::odd_case: return "odd_case";
        case lemmas::LteBranch::even_two_case: return "even_two_case";
        case lemmas::LteBranch::inapplicable: break;
    }
    return "inapplicable";
}

int run_lte(const std::string& x_s, const std::string& y_s, const std::string& ell_s,
            const std::string& p_s, bool oracle, Format fmt) {
    const lemmas::LtePremise pr{parse_integer("--x", x_s), parse_integer("--y", y_s),
                                parse_integer("--ell", ell_s), parse_integer("--p", p_s)};
    const lemmas::LteBranch branch = lemmas::lte_classify(pr);
    const Valuation v = oracle ? lemmas::lte_oracle(pr) : lemmas::lte_valuation(pr);
    switch (fmt) {
        case Format::text:
            std::cout << branch_name(branch) << ' ' << v.to_string() << '\n';
            break;
        case Format::jsonl: {
            json j{{"x", pr.x.str()},   {"y", pr.y.str()},
                   {"ell", pr.ell.str()}, {"p", pr.p.str()},
                   {"branch", branch_name(branch)}, {"infinite", v.is_infinite()}};
            j["e"] = v.is_infinite() ? json(nullptr) : json(std::to_string(v.exponent()));
            emit_json(j);
            break;
        }
        case Format::csv:
            std::cout << "x,y,ell,p,branch,e,infinite\n"
                      << pr.x.str() << ',' << pr.y.str() << ',' << pr.ell.str() << ','
                      << pr.p.str() << ',' << branch_name(branch) << ','
                      << (v.is_infinite() ? "" : std::to_string(v.exponent())) << ','
                      << bool_str(v.is_infinite()) << '\n';
            break;
    }
    return 0;
}

// ---- order ----

int run_order(const std::string& u_s, const std::string& p_s, Format fmt) {
    const Integer u = parse_integer("--u", u_s);
    const Integer p = parse_integer("--p", p_s);
    const Integer ord = arith::multiplicative_order(u, p);
    switch (fmt) {
        case Format::text:
            std::cout << ord.str() << '\n';
            break;
        case Format::jsonl:
            emit_json(json{{"u", u.str()}, {"p", p.str()}, {"order", ord.str()}});
            break;
        case Format::csv:
            std::cout << "u,p,order\n" << u.str() << ',' << p.str() << ',' << ord.str() << '\n';
            break;
    }
    return 0;
}

// ---- divides ----

int run_divides(const std::string& a_s, const std::string& b_s, const std::string& n_s,
                const std::string& k_s, const std::string& sign_s, Format fmt) {
    const search::SignedPower q{parse_integer("--a", a_s), parse_integer("--b", b_s),
                                parse_integer("--n", n_s), parse_integer("--k", k_s),
                                parse_sign(sign_s)};
    const bool result = search::divides_signed_power(q);
    switch (fmt) {
        case Format::text:
            std::cout << bool_str(result) << '\n';
            break;
        case Format::jsonl:
            emit_json(json{{"a", q.a.str()},
                           {"b", q.b.str()},
                           {"n", q.n.str()},
                           {"k", q.k.str()},
                           {"sign", search::to_string(q.sign)},
                           {"divides", result}});
            break;
        case Format::csv:
            std::cout << "a,b,n,k,sign,divides\n"
                      << q.a.str() << ',' << q.b.str() << ',' << q.n.str() << ','
                      << q.k.str() << ',' << search::to_string(q.sign) << ','
                      << bool_str(result) << '\n';
            break;
    }
    return 0;
}

// ---- rset / finiteness ----

void emit_rset_elements(const search::RSetReport& rep, Format fmt, bool with_header) {
    switch (fmt) {
        case Format::text:
            for (const Integer& n : rep.elements) std::cout << n.str() << '\n';
            break;
        case Format::jsonl:
            for (const Integer& n : rep.elements)
                emit_json(json{{"a", rep.a.str()},
                               {"b", rep.b.str()},
                               {"k", rep.k.str()},
                               {"sign", search::to_string(rep.sign)},
                               {"n", n.str()}});
            break;
        case Format::csv:
            if (with_header) std::cout << "a,b,k,sign,n\n";
            for (const Integer& n : rep.elements)
                std::cout << rep.a.str() << ',' << rep.b.str() << ',' << rep.k.str() << ','
                          << search::to_string(rep.sign) << ',' << n.str() << '\n';
            break;
    }
}

int run_rset(const std::string& a_s, const std::string& b_s, const std::string& k_s,
             const std::string& sign_s, const std::string& n_max_s, unsigned jobs,
             Format fmt) {
    const auto rep = search::rset_enumerate(
        parse_integer("--a", a_s), parse_integer("--b", b_s), parse_integer("--k", k_s),
        parse_sign(sign_s), parse_integer("--n-max", n_max_s), jobs);
    emit_rset_elements(rep, fmt, true);
    progress("# rset: " + std::to_string(rep.elements.size()) + " element(s), complete up to " +
             rep.complete_up_to.str());
    return 0;
}

int run_finiteness(const std::string& a_s, const std::string& b_s, const std::string& k_s,
                   const std::string& n_max_s, unsigned jobs, Format fmt) {
    const auto rep = search::finiteness_report(
        parse_integer("--a", a_s), parse_integer("--b", b_s), parse_integer("--k", k_s),
        parse_integer("--n-max", n_max_s), jobs);
    if (fmt == Format::text) {
        for (const Integer& n : rep.plus.elements) std::cout << "plus " << n.str() << '\n';
        for (const Integer& n : rep.minus.elements) std::cout << "minus " << n.str() << '\n';
    } else {
        emit_rset_elements(rep.plus, fmt, true);
        emit_rset_elements(rep.minus, fmt, false);
    }
    progress("# finiteness: plus " + std::to_string(rep.plus.elements.size()) + ", minus " +
             std::to_string(rep.minus.elements.size()) + ", largest element " +
             rep.largest_element.str() + ", complete up to " + rep.plus.complete_up_to.str());
    return 0;
}

// ---- lemma2 ----

int run_lemma2(const std::string& z_s, bool oracle, const std::string& bound_s, Format fmt) {
    const Integer z = parse_integer("--z", z_s);
    if (oracle) {
        if (bound_s.empty()) throw std::invalid_argument("--oracle requires --bound");
        const Integer bound = parse_integer("--bound", bound_s);
        const auto pairs = lemmas::lemma2_oracle(z, bound);
        switch (fmt) {
            case Format::text:
                for (const auto& [x, y] : pairs)
                    std::cout << '(' << x.str() << ',' << y.str() << ")\n";
                break;
            case Format::jsonl:
                for (const auto& [x, y] : pairs)
                    emit_json(json{{"z", z.str()},
                                   {"bound", bound.str()},
                                   {"x", x.str()},
                                   {"y", y.str()}});
                break;
            case Format::csv:
                std::cout << "z,bound,x,y\n";
                for (const auto& [x, y] : pairs)
                    std::cout << z.str() << ',' << bound.str() << ',' << x.str() << ','
                              << y.str() << '\n';
                break;
        }
        return 0;
    }
    if (!bound_s.empty()) throw std::invalid_argument("--bound requires --oracle");
    const auto solution = lemmas::lemma2_solve(z);
    switch (fmt) {
        case Format::text:
            if (solution)
                std::cout << '(' << solution->first.str() << ',' << solution->second.str()
                          << ")\n";
            else
                std::cout << "none\n";
            break;
        case Format::jsonl: {
            json j{{"z", z.str()}};
            j["x"] = solution ? json(solution->first.str()) : json(nullptr);
            j["y"] = solution ? json(solution->second.str()) : json(nullptr);
            emit_json(j);
            break;
        }
        case Format::csv:
            std::cout << "z,x,y\n"
                      << z.str() << ',' << (solution ? solution->first.str() : "") << ','
                      << (solution ? solution->second.str() : "") << '\n';
            break;
    }
    return 0;
}

// ---- check-lemma ----

int run_check_lemma(const std::string& x_s, const std::string& y_s, const std::string& z_s,
                    const std::string& ell_s, Format fmt) {
    const Integer x = parse_integer("--x", x_s);
    const Integer y = parse_integer("--y", y_s);
    const Integer z = parse_integer("--z", z_s);
    const Integer ell = parse_integer("--ell", ell_s);
    const auto rep = lemmas::lemma_divides_check(x, y, z, ell);
    bool branches_ok = true;
    for (const auto& br : rep.odd_prime_branches)
        branches_ok = branches_ok && br.p_divides_x_plus_y && br.ell_odd && br.bound_holds;
    switch (fmt) {
        case Format::text:
            std::cout << "coprime_ok=" << bool_str(rep.coprime_ok)
                      << " no_q_divides_difference=" << bool_str(rep.no_q_divides_difference)
                      << " even_case_ok=" << bool_str(rep.even_case_ok)
                      << " all_ok=" << bool_str(rep.all_ok()) << '\n';
            for (const auto& br : rep.odd_prime_branches)
                std::cout << "p=" << br.p.str()
                          << " p_divides_x_plus_y=" << bool_str(br.p_divides_x_plus_y)
                          << " ell_odd=" << bool_str(br.ell_odd)
                          << " bound_holds=" << bool_str(br.bound_holds) << '\n';
            break;
        case Format::jsonl: {
            json branches = json::array();
            for (const auto& br : rep.odd_prime_branches)
                branches.push_back(json{{"p", br.p.str()},
                                        {"p_divides_x_plus_y", br.p_divides_x_plus_y},
                                        {"ell_odd", br.ell_odd},
                                        {"bound_holds", br.bound_holds}});
            emit_json(json{{"x", x.str()},
                           {"y", y.str()},
                           {"z", z.str()},
                           {"ell", ell.str()},
                           {"coprime_ok", rep.coprime_ok},
                           {"no_q_divides_difference", rep.no_q_divides_difference},
                           {"even_case_ok", rep.even_case_ok},
                           {"odd_prime_branches", branches},
                           {"all_ok", rep.all_ok()}});
            break;
        }
        case Format::csv:
            std::cout << "x,y,z,ell,coprime_ok,no_q_divides_difference,even_case_ok,"
                         "branches_ok,all_ok\n"
                      << x.str() << ',' << y.str() << ',' << z.str() << ',' << ell.str() << ','
                      << bool_str(rep.coprime_ok) << ',' << bool_str(rep.no_q_divides_difference)
                      << ',' << bool_str(rep.even_case_ok) << ',' << bool_str(branches_ok) << ','
                      << bool_str(rep.all_ok()) << '\n';
            break;
    }
    return 0;
}

// ---- verify ----

using TripleKey = std::array<Integer, 3>;
using PairKey = std::array<Integer, 2>;

std::vector<Integer> split_fields(const std::string& flag, const std::string& text,
                                  std::size_t count) {
    std::vector<Integer> out;
    std::string::size_type pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const std::string piece = text.substr(pos, comma == std::string::npos
                                                       ? std::string::npos
                                                       : comma - pos);
        out.push_back(parse_integer(flag, piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != count)
        throw std::invalid_argument(flag + ": expected " + std::to_string(count) +
                                    " comma-separated integers, got '" + text + "'");
    return out;
}

std::set<TripleKey> expected_triples(search::TheoremPart part, const search::SearchWindow& w) {
    std::set<TripleKey> expected;
    if (part == search::TheoremPart::part_i) {
        if (w.a_max >= 2 && w.n_max >= 3) expected.insert({2, 1, 3});
        for (int c = 0; c <= 2; ++c) {
            const Integer v = Integer(1) << c;
            if (w.a_max >= v && w.n_max >= 2) expected.insert({v, v, 2});
        }
    } else {
        if (w.a_max >= 3 && w.n_max >= 2) expected.insert({3, 1, 2});
        if (w.a_max >= 2 && w.n_max >= 3) expected.insert({2, -1, 3});
    }
    return expected;
}

std::set<PairKey> expected_pairs(const search::SearchWindow& w) {
    std::set<PairKey> expected;
    if (w.m_max >= 1 && w.n_max >= 2) expected.insert({1, 2});
    if (w.m_max >= 2 && w.n_max >= 3) expected.insert({2, 3});
    return expected;
}

std::string triple_str(const TripleKey& t) {
    return "(" + t[0].str() + "," + t[1].str() + "," + t[2].str() + ")";
}

std::string pair_str(const PairKey& p) { return "(" + p[0].str() + "," + p[1].str() + ")"; }

template <typename Key>
int report_deviations(const std::set<Key>& found, const std::set<Key>& expected,
                      std::string (*render)(const Key&)) {
    int deviations = 0;
    for (const Key& k : found) {
        if (!expected.contains(k)) {
            std::cerr << "deviation: unexpected " << render(k) << '\n';
            ++deviations;
        }
    }
    for (const Key& k : expected) {
        if (!found.contains(k)) {
            std::cerr << "deviation: missing " << render(k) << '\n';
            ++deviations;
        }
    }
    return deviations == 0 ? 0 : 1;
}

int run_verify_theorem(search::TheoremPart part, const std::string& a_max_s,
                       const std::string& n_max_s, bool relaxed, unsigned jobs,
                       const std::vector<std::string>& expect_s, Format fmt) {
    search::SearchWindow w;
    w.a_max = parse_integer("--a-max", a_max_s);
    w.n_max = parse_integer("--n-max", n_max_s);
    const auto rep = part == search::TheoremPart::part_i
                         ? search::verify_theorem1_part_i(w, relaxed, jobs)
                         : search::verify_theorem1_part_ii(w, relaxed, jobs);
    const std::string part_name = part == search::TheoremPart::part_i ? "i" : "ii";

    switch (fmt) {
        case Format::text:
            for (const auto& t : rep.triples)
                std::cout << '(' << t.a.str() << ',' << t.b.str() << ',' << t.n.str() << ")\n";
            break;
        case Format::jsonl:
            for (const auto& t : rep.triples)
                emit_json(json{{"a", t.a.str()},
                               {"b", t.b.str()},
                               {"n", t.n.str()},
                               {"delta", t.delta.str()},
                               {"alpha", t.alpha.str()},
                               {"beta", t.beta.str()},
                               {"part", part_name}});
            break;
        case Format::csv:
            std::cout << "a,b,n,delta,alpha,beta,part\n";
            for (const auto& t : rep.triples)
                std::cout << t.a.str() << ',' << t.b.str() << ',' << t.n.str() << ','
                          << t.delta.str() << ',' << t.alpha.str() << ',' << t.beta.str() << ','
                          << part_name << '\n';
            break;
    }
    progress("# verify theorem1-" + part_name + ": " + std::to_string(rep.triples.size()) +
             " triple(s) in window a_max=" + w.a_max.str() + " n_max=" + w.n_max.str());

    std::set<TripleKey> expected;
    if (!expect_s.empty()) {
        for (const auto& e : expect_s) {
            auto fields = split_fields("--expect", e, 3);
            expected.insert({fields[0], fields[1], fields[2]});
        }
    } else if (relaxed) {
        return 0;  // no fixed solution set is attached to the relaxed predicate
    } else {
        expected = expected_triples(part, w);
    }
    std::set<TripleKey> found;
    for (const auto& t : rep.triples) found.insert({t.a, t.b, t.n});
    return report_deviations(found, expected, triple_str);
}

int run_verify_corollary(const std::string& m_max_s, const std::string& n_max_s, unsigned jobs,
                         const std::vector<std::string>& expect_s, Format fmt) {
    search::SearchWindow w;
    w.m_max = parse_integer("--m-max", m_max_s);
    w.n_max = parse_integer("--n-max", n_max_s);
    const auto rep = search::verify_corollary(w, jobs);

    switch (fmt) {
        case Format::text:
            for (const auto& p : rep.pairs)
                std::cout << '(' << p.m.str() << ',' << p.n.str() << ")\n";
            break;
        case Format::jsonl:
            for (const auto& p : rep.pairs)
                emit_json(json{{"m", p.m.str()}, {"n", p.n.str()}});
            break;
        case Format::csv:
            std::cout << "m,n\n";
            for (const auto& p : rep.pairs) std::cout << p.m.str() << ',' << p.n.str() << '\n';
            break;
    }
    progress("# verify corollary: " + std::to_string(rep.pairs.size()) +
             " pair(s) in window m_max=" + w.m_max.str() + " n_max=" + w.n_max.str());

    std::set<PairKey> expected;
    if (!expect_s.empty()) {
        for (const auto& e : expect_s) {
            auto fields = split_fields("--expect", e, 2);
            expected.insert({fields[0], fields[1]});
        }
    } else {
        expected = expected_pairs(w);
    }
    std::set<PairKey> found;
    for (const auto& p : rep.pairs) found.insert({p.m, p.n});
    return report_deviations(found, expected, pair_str);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ntdiv: divisibility of a^n +/- b^n by powers of n"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_s = "text";
    app.add_option("--format", format_s, "output format: text, jsonl, csv")
        ->check(CLI::IsMember({"text", "jsonl", "csv"}));

    // val
    auto* val_cmd = app.add_subcommand("val", "p-adic valuation e_p(c)");
    std::string val_p, val_c;
    val_cmd->add_option("--p", val_p, "prime p")->required();
    val_cmd->add_option("--c", val_c, "integer c (0 gives infinity)")->required();

    // lte
    auto* lte_cmd = app.add_subcommand(
        "lte", "lifting-the-exponent: branch and e_p(x^ell - y^ell)");
    std::string lte_x, lte_y, lte_ell, lte_p;
    bool lte_use_oracle = false;
    lte_cmd->add_option("--x", lte_x, "x")->required();
    lte_cmd->add_option("--y", lte_y, "y")->required();
    lte_cmd->add_option("--ell", lte_ell, "exponent ell >= 1")->required();
    lte_cmd->add_option("--p", lte_p, "prime p")->required();
    lte_cmd->add_flag("--oracle", lte_use_oracle,
                      "compute by exact expansion instead of the closed form");

    // order
    auto* order_cmd = app.add_subcommand("order", "multiplicative order of u modulo prime p");
    std::string order_u, order_p;
    order_cmd->add_option("--u", order_u, "unit u")->required();
    order_cmd->add_option("--p", order_p, "prime p")->required();

    // divides
    auto* divides_cmd = app.add_subcommand("divides", "does n^k divide a^n +/- b^n?");
    std::string div_a, div_b, div_n, div_k, div_sign;
    divides_cmd->add_option("--a", div_a, "a")->required();
    divides_cmd->add_option("--b", div_b, "b")->required();
    divides_cmd->add_option("--n", div_n, "n >= 1")->required();
    divides_cmd->add_option("--k", div_k, "k >= 0")->required();
    divides_cmd->add_option("--sign", div_sign, "plus or minus")->required();

    // rset
    auto* rset_cmd = app.add_subcommand(
        "rset", "enumerate R_k^sign(a,b): all n in [1, n-max] with n^k | a^n +/- b^n");
    std::string rset_a, rset_b, rset_k, rset_sign, rset_n_max;
    unsigned rset_jobs = 1;
    rset_cmd->add_option("--a", rset_a, "a")->required();
    rset_cmd->add_option("--b", rset_b, "b")->required();
    rset_cmd->add_option("--k", rset_k, "k >= 0")->required();
    rset_cmd->add_option("--sign", rset_sign, "plus or minus")->required();
    rset_cmd->add_option("--n-max", rset_n_max, "upper bound of the n window")->required();
    rset_cmd->add_option("--jobs", rset_jobs, "worker threads (default 1)")
        ->check(CLI::Range(1u, 1024u));

    // lemma2
    auto* lemma2_cmd = app.add_subcommand(
        "lemma2", "odd x > y >= 0 with x^2 - y^2 = 2^z (closed form or --oracle search)");
    std::string lemma2_z, lemma2_bound;
    bool lemma2_use_oracle = false;
    lemma2_cmd->add_option("--z", lemma2_z, "z >= 0")->required();
    lemma2_cmd->add_flag("--oracle", lemma2_use_oracle, "enumerate by direct search");
    lemma2_cmd->add_option("--bound", lemma2_bound, "search bound for --oracle");

    // check-lemma
    auto* check_cmd = app.add_subcommand(
        "check-lemma", "conclusion checks for z | x^ell + y^ell with gcd(x,y) = 1");
    std::string chk_x, chk_y, chk_z, chk_ell;
    check_cmd->add_option("--x", chk_x, "x")->required();
    check_cmd->add_option("--y", chk_y, "y")->required();
    check_cmd->add_option("--z", chk_z, "z (nonzero divisor of x^ell + y^ell)")->required();
    check_cmd->add_option("--ell", chk_ell, "exponent ell >= 1")->required();

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "exhaustive window verification of the classifications");
    verify_cmd->require_subcommand(1);

    auto* th1_cmd = verify_cmd->add_subcommand(
        "theorem1-i", "triples with n^a | a^n + b^n and n^alpha | alpha^n + beta^n");
    auto* th2_cmd = verify_cmd->add_subcommand(
        "theorem1-ii", "triples with n^a | a^n - b^n and n^alpha | alpha^n - beta^n");
    std::string th_a_max[2], th_n_max[2];
    bool th_relaxed[2] = {false, false};
    unsigned th_jobs[2] = {1, 1};
    std::vector<std::string> th_expect[2];
    CLI::App* th_cmds[2] = {th1_cmd, th2_cmd};
    for (int i = 0; i < 2; ++i) {
        th_cmds[i]->add_option("--a-max", th_a_max[i], "upper bound for a")->required();
        th_cmds[i]->add_option("--n-max", th_n_max[i], "upper bound for n")->required();
        th_cmds[i]->add_flag("--relaxed", th_relaxed[i],
                             "drop the condition n^alpha | alpha^n +/- beta^n");
        th_cmds[i]->add_option("--jobs", th_jobs[i], "worker threads (default 1)")
            ->check(CLI::Range(1u, 1024u));
        th_cmds[i]->add_option("--expect", th_expect[i],
                               "expected triple 'a,b,n' (repeatable; overrides the default "
                               "solution set)");
    }

    auto* cor_cmd = verify_cmd->add_subcommand("corollary",
                                               "pairs (m, n) with n >= 2 and n^m | m^n + 1");
    std::string cor_m_max, cor_n_max;
    unsigned cor_jobs = 1;
    std::vector<std::string> cor_expect;
    cor_cmd->add_option("--m-max", cor_m_max, "upper bound for m")->required();
    cor_cmd->add_option("--n-max", cor_n_max, "upper bound for n")->required();
    cor_cmd->add_option("--jobs", cor_jobs, "worker threads (default 1)")
        ->check(CLI::Range(1u, 1024u));
    cor_cmd->add_option("--expect", cor_expect,
                        "expected pair 'm,n' (repeatable; overrides the default solution set)");

    // finiteness
    auto* fin_cmd = app.add_subcommand(
        "finiteness", "R_k^+ and R_k^- windows for coprime a,b with |ab| >= 2, k >= 3");
    std::string fin_a, fin_b, fin_k, fin_n_max;
    unsigned fin_jobs = 1;
    fin_cmd->add_option("--a", fin_a, "a")->required();
    fin_cmd->add_option("--b", fin_b, "b")->required();
    fin_cmd->add_option("--k", fin_k, "k >= 3")->required();
    fin_cmd->add_option("--n-max", fin_n_max, "upper bound of the n window")->required();
    fin_cmd->add_option("--jobs", fin_jobs, "worker threads (default 1)")
        ->check(CLI::Range(1u, 1024u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format fmt = parse_format(format_s);
        if (val_cmd->parsed()) return run_val(val_p, val_c, fmt);
        if (lte_cmd->parsed()) return run_lte(lte_x, lte_y, lte_ell, lte_p, lte_use_oracle, fmt);
        if (order_cmd->parsed()) return run_order(order_u, order_p, fmt);
        if (divides_cmd->parsed())
            return run_divides(div_a, div_b, div_n, div_k, div_sign, fmt);
        if (rset_cmd->parsed())
            return run_rset(rset_a, rset_b, rset_k, rset_sign, rset_n_max, rset_jobs, fmt);
        if (lemma2_cmd->parsed()) return run_lemma2(lemma2_z, lemma2_use_oracle, lemma2_bound, fmt);
        if (check_cmd->parsed()) return run_check_lemma(chk_x, chk_y, chk_z, chk_ell, fmt);
        if (verify_cmd->parsed()) {
            if (th1_cmd->parsed())
                return run_verify_theorem(search::TheoremPart::part_i, th_a_max[0], th_n_max[0],
                                          th_relaxed[0], th_jobs[0], th_expect[0], fmt);
            if (th2_cmd->parsed())
                return run_verify_theorem(search::TheoremPart::part_ii, th_a_max[1], th_n_max[1],
                                          th_relaxed[1], th_jobs[1], th_expect[1], fmt);
            if (cor_cmd->parsed())
                return run_verify_corollary(cor_m_max, cor_n_max, cor_jobs, cor_expect, fmt);
        }
        if (fin_cmd->parsed())
            return run_finiteness(fin_a, fin_b, fin_k, fin_n_max, fin_jobs, fmt);
        std::cerr << "error: no subcommand given\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
