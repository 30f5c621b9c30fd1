#include "acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "nyldon/analysis.hpp"
#include "nyldon/fastfactor.hpp"
#include "nyldon/hallsets.hpp"
#include "nyldon/lazard.hpp"
#include "nyldon/melancon.hpp"
#include "nyldon/oracle.hpp"

namespace nyldon::acceptance {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct CliOutput {
    int code;
    std::string out;
    std::string err;
    double seconds;
};

CliOutput cli_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const auto t0 = Clock::now();
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str(), seconds_since(t0)};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split_words(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// Table 1: binary Nyldon words of length at most 7.
const std::vector<std::string> table1 = {
    "0",       "1",       "10",      "100",     "101",     "1000",    "1001",    "1011",    "10000",
    "10001",   "10010",   "10011",   "10110",   "10111",   "100000",  "100001",  "100010",  "100011",
    "100110",  "100111",  "101100",  "101110",  "101111",  "1000000", "1000001", "1000010", "1000011",
    "1000100", "1000110", "1000111", "1001010", "1001100", "1001110", "1001111", "1011000", "1011001",
    "1011010", "1011100", "1011101", "1011110", "1011111"};

// Table 2: (Y_i of length <= 5, u_i) for the binary run.
const std::vector<std::pair<std::string, std::string>> table2 = {
    {"0 1", "0"},
    {"1 10 100 1000 10000", "1"},
    {"10 101 1011 10111 100 1001 10011 1000 10001 10000", "10"},
    {"101 10110 1011 10111 100 10010 1001 10011 1000 10001 10000", "100"},
    {"101 10110 1011 10111 10010 1001 10011 1000 10001 10000", "1000"},
    {"101 10110 1011 10111 10010 1001 10011 10001 10000", "10000"},
    {"101 10110 1011 10111 10010 1001 10011 10001", "10001"},
    {"101 10110 1011 10111 10010 1001 10011", "1001"},
    {"101 10110 1011 10111 10010 10011", "10010"},
    {"101 10110 1011 10111 10011", "10011"},
    {"101 10110 1011 10111", "101"},
    {"10110 1011 10111", "1011"},
    {"10110 10111", "10110"},
    {"10111", "10111"},
};

CriterionResult table1_reproduction() {
    CriterionResult r{1, "Table 1 reproduction", false, "", 0};
    const auto run = cli_run({"enumerate", "--alphabet", "2", "--max-len", "7"});
    const auto got = lines(run.out);
    std::vector<std::size_t> counts(8);
    for (const auto& w : got) {
        if (w.size() < counts.size()) ++counts[w.size()];
    }
    const std::vector<std::size_t> expected_counts{0, 2, 1, 2, 3, 6, 9, 18};
    r.passed = run.code == 0 && got == table1 && counts == expected_counts && run.seconds < 1.0;
    r.detail = std::to_string(got.size()) + " words, counts";
    for (std::size_t l = 1; l < counts.size(); ++l) r.detail += " " + std::to_string(counts[l]);
    r.detail += ", cli time " + fmt("%.3f s", run.seconds);
    return r;
}

std::vector<std::vector<std::string>> json_passes(const std::string& out) {
    std::vector<std::vector<std::string>> passes;
    const auto parsed = json::parse(out);
    for (const auto& p : parsed["passes"]) passes.push_back(p["blocks"].get<std::vector<std::string>>());
    return passes;
}

CriterionResult worked_examples() {
    CriterionResult r{2, "worked examples", false, "", 0};
    const std::string w = "10001011010101";
    const auto conj = cli_run({"conjugate", w});
    const auto fact = cli_run({"factor", w});
    const auto circ = cli_run({"trace", w, "--json"});
    const auto lin = cli_run({"trace", w, "--linear", "--json"});

    const std::vector<std::vector<std::string>> circular_expected = {
        {"1", "0", "0", "0", "1", "0", "1", "1", "0", "1", "0", "1", "0", "1"},
        {"1000", "10", "1", "10", "10", "10", "1"},
        {"1000", "101", "10", "10", "101"},
        {"1000", "1011010", "101"},
        {"1011010", "1011000"},
        {"10110101011000"},
    };
    auto linear_expected = circular_expected;
    linear_expected[4] = {"1011010", "101"};
    linear_expected[5] = {"1011010101"};

    const bool conj_ok = conj.code == 0 && conj.out == "10110101011000\n";
    const bool fact_ok = fact.code == 0 && fact.out == "1000 1011010101\n";
    const bool circ_ok = circ.code == 0 && json_passes(circ.out) == circular_expected;
    const bool lin_ok = lin.code == 0 && json_passes(lin.out) == linear_expected &&
                        json::parse(lin.out)["result"] == json::array({"1000", "1011010101"});
    r.passed = conj_ok && fact_ok && circ_ok && lin_ok;
    r.detail = "conjugate " + std::string(conj_ok ? "ok" : "MISMATCH") + ", factor " + (fact_ok ? "ok" : "MISMATCH") +
               ", circular trace " + (circ_ok ? "ok" : "MISMATCH") + ", linear trace " + (lin_ok ? "ok" : "MISMATCH");
    return r;
}

CriterionResult oracle_equivalence() {
    CriterionResult r{3, "oracle equivalence", false, "", 0};
    const auto t0 = Clock::now();
    std::size_t checked = 0, mismatches = 0;
    std::string first;
    auto sweep = [&](std::size_t k, std::size_t max_len) {
        for (std::size_t len = 1; len <= max_len; ++len) {
            for (const auto& w : all_words(Alphabet(k), len)) {
                ++checked;
                const auto brute = oracle::nyldon_factorization_bruteforce(w).factors;
                const auto fast = nyldon_factorize(w).factors;
                const auto mel = factorize(w, lex_policy()).factors;
                if (brute != fast || brute != mel) {
                    if (mismatches++ == 0) first = to_string(w);
                }
            }
        }
    };
    sweep(2, 12);
    sweep(3, 8);
    const double secs = seconds_since(t0);
    r.passed = mismatches == 0 && secs < 120;
    r.detail = std::to_string(checked) + " words, " + std::to_string(mismatches) + " mismatches" +
               (first.empty() ? "" : " (first " + first + ")") + ", " + fmt("%.1f s", secs);
    return r;
}

long long mobius(std::size_t n) {
    long long mu = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

// (1/n) sum_{d | n} mu(d) k^{n/d}
long long necklaces(std::size_t k, std::size_t n) {
    long long sum = 0;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        long long p = 1;
        for (std::size_t i = 0; i < n / d; ++i) p *= static_cast<long long>(k);
        sum += mobius(d) * p;
    }
    return sum / static_cast<long long>(n);
}

CriterionResult unique_conjugate() {
    CriterionResult r{4, "unique Nyldon conjugate", false, "", 0};
    std::size_t primitive = 0, bad_rotation = 0, bad_count = 0;
    for (std::size_t len = 1; len <= 12; ++len) {
        long long nyldon = 0;
        for (const auto& w : all_words(Alphabet(2), len)) {
            if (is_nyldon(w)) ++nyldon;
            if (!is_primitive(w)) continue;
            ++primitive;
            std::size_t hits = 0;
            for (const auto& c : conjugates(w)) hits += is_nyldon(c);
            bad_rotation += hits != 1;
        }
        bad_count += nyldon != necklaces(2, len);
    }
    r.passed = bad_rotation == 0 && bad_count == 0;
    r.detail = std::to_string(primitive) + " primitive words, " + std::to_string(bad_rotation) +
               " without exactly one Nyldon rotation, " + std::to_string(bad_count) +
               " lengths off the necklace count";
    return r;
}

CriterionResult comparison_bound() {
    CriterionResult r{5, "comparison bound", false, "", 0};
    std::mt19937_64 rng(20140101);
    std::uniform_int_distribution<std::size_t> length(1, 10000);
    std::uniform_int_distribution<std::size_t> alphabet(2, 4);
    std::size_t violations = 0;
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
        const Alphabet a(alphabet(rng));
        std::uniform_int_distribution<Letter> letter(0, a.max_letter());
        std::vector<Letter> letters(length(rng));
        for (auto& x : letters) x = letter(rng);
        const Word w(a, std::move(letters));
        const auto c = nyldon_factorize_counted(w, CompareMode::naive).comparisons;
        if (c > 2 * w.size() - 1) ++violations;
        worst = std::max(worst, static_cast<double>(c) / static_cast<double>(2 * w.size() - 1));
    }
    r.passed = violations == 0;
    r.detail = "10000 random words, " + std::to_string(violations) + " violations, max comparisons/(2|w|-1) = " +
               fmt("%.3f", worst);
    return r;
}

CriterionResult table2_reproduction() {
    CriterionResult r{6, "Table 2 reproduction", false, "", 0};
    const auto run = cli_run({"lazard", "--alphabet", "2", "--max-len", "5", "--trace", "--json"});
    if (run.code != 0) {
        r.detail = "cli failed: " + run.err;
        return r;
    }
    const auto j = json::parse(run.out);
    const auto& steps = j["steps"];
    std::size_t row_mismatches = 0;
    for (std::size_t i = 0; i < table2.size() && i < steps.size(); ++i) {
        const auto words = split_words(table2[i].first);
        const std::set<std::string> expected(words.begin(), words.end());
        const auto got = steps[i]["set"].get<std::vector<std::string>>();
        const std::set<std::string> got_set(got.begin(), got.end());
        if (got_set != expected || got.size() != got_set.size() ||
            steps[i]["chosen"].get<std::string>() != table2[i].second) {
            ++row_mismatches;
        }
    }
    const bool shape = steps.size() == table2.size() && j["total_steps"] == 14;
    const bool finish = j["finishing_step"] == 4 && j["stop_word"] == "10";
    r.passed = shape && row_mismatches == 0 && finish;
    r.detail = std::to_string(steps.size()) + " steps, " + std::to_string(row_mismatches) +
               " row mismatches, finishing step " + j["finishing_step"].dump() + ", stop word " +
               j["stop_word"].dump();
    return r;
}

CriterionResult lazard_propositions() {
    CriterionResult r{7, "Lazard propositions", true, "", 0};
    struct Case {
        std::size_t ell;
        std::string stop;
        std::size_t after;
    };
    const Alphabet bin(2);
    for (const Case& c : {Case{15, "1011111", 492}, Case{18, "101111110", 477}}) {
        const auto t0 = Clock::now();
        const auto report = lazard::lazard_report(bin, c.ell);
        const double secs = seconds_since(t0);
        const std::string measured_stop = report.stop_word ? to_string(*report.stop_word) : "-";
        const auto predicted = to_string(lazard::predicted_stop_word(bin, c.ell));
        const auto formula = lazard::count_words_after_stop(bin, c.ell);

        // Independent count: Nyldon words of length <= l lex greater than
        // the stop word.
        std::size_t enumerated = 0;
        if (report.stop_word) {
            for (std::size_t len = 1; len <= c.ell; ++len) {
                for (const auto& w : all_words(bin, len)) {
                    if (w > *report.stop_word && nyldon_factorize(w, CompareMode::naive).size() == 1) ++enumerated;
                }
            }
        }
        const bool ok = measured_stop == c.stop && report.words_after_stop == c.after && secs < 120;
        r.passed = r.passed && ok;
        if (!r.detail.empty()) r.detail += "; ";
        r.detail += "l=" + std::to_string(c.ell) + ": stop " + measured_stop + " (predicted " + predicted +
                    "), words after stop measured " + std::to_string(report.words_after_stop) + ", enumerated " +
                    std::to_string(enumerated) + ", closed form " + formula.str() + ", expected " +
                    std::to_string(c.after) + ", " + fmt("%.1f s", secs);
    }
    return r;
}

CriterionResult kraft_mcmillan() {
    CriterionResult r{8, "Kraft-McMillan", false, "", 0};
    const auto trace = lazard::lazard_run(Alphabet(2), 5);
    const lazard::Rational one = 1;
    const lazard::Rational lower = one - lazard::Rational(1, 1000000);
    bool y1_exact = false, monotone = true, codes = true;
    std::vector<std::size_t> outside;
    double worst = 0;
    for (const auto& s : trace) {
        if (s.done()) break;
        const auto sum = lazard::kraft_sum(s, 40);
        if (s.step == 1) {
            y1_exact = sum == one;
        } else {
            if (!(sum > lower && sum < one)) outside.push_back(s.step);
            const lazard::Rational deficit = one - sum;
            worst = std::max(worst, boost::multiprecision::numerator(deficit).convert_to<double>() /
                                        boost::multiprecision::denominator(deficit).convert_to<double>());
        }
        lazard::Rational prev = 0;
        for (std::size_t L = 5; L <= 40; ++L) {
            const auto cur = lazard::kraft_sum(s, L);
            monotone = monotone && cur >= prev;
            prev = cur;
        }
        codes = codes && lazard::lazard_code_check(s, 10).uniquely_decodable;
    }
    r.passed = y1_exact && outside.empty() && monotone && codes;
    r.detail = std::string("Y1 exact ") + (y1_exact ? "yes" : "no") + ", monotone " + (monotone ? "yes" : "no") +
               ", codes at L=10 " + (codes ? "yes" : "no") + ", largest deficit at L=40 " + fmt("%.4g", worst);
    if (!outside.empty()) {
        r.detail += ", steps outside (1-1e-6, 1):";
        for (auto i : outside) r.detail += " " + std::to_string(i);
    }
    return r;
}

CriterionResult circular_codes(unsigned jobs) {
    CriterionResult r{9, "circular codes", true, "", 0};
    for (std::size_t ell = 2; ell <= 5; ++ell) {
        std::vector<Word> code;
        for (auto& w : all_words(Alphabet(2), ell)) {
            if (is_nyldon(w)) code.push_back(std::move(w));
        }
        const auto v = analysis::circular_code_check(code, 3, {}, jobs);
        r.passed = r.passed && v.is_circular;
        r.detail += "l=" + std::to_string(ell) + (v.is_circular ? " circular; " : " NOT circular; ");
    }
    const std::vector<Word> bad{binary("00"), binary("01"), binary("10")};
    const auto v = analysis::circular_code_check(bad, 2, {}, jobs);
    const std::set<Word> bad_set(bad.begin(), bad.end());
    const auto classic = analysis::rotation_parse(bad_set, {binary("00"), binary("10")}, 1);
    const bool classic_ok = classic && *classic == std::vector<Word>{binary("01"), binary("00")};
    r.passed = r.passed && !v.is_circular && v.witness.has_value() && classic_ok;
    r.detail += "{00, 01, 10}: ";
    r.detail += v.is_circular ? "circular" : "not circular";
    if (v.witness) {
        r.detail += ", first witness (" + to_string(Factorization{v.witness->sequence}, ", ") + ") rotated by " +
                    std::to_string(v.witness->offset);
    }
    r.detail += std::string(", 0010 rotated by 1 = 01.00 ") + (classic_ok ? "confirmed" : "NOT confirmed");
    return r;
}

CriterionResult power_bound(unsigned jobs) {
    CriterionResult r{10, "power bound", false, "", 0};
    const auto t0 = Clock::now();
    const auto p = analysis::power_profile(binary("01111011011111011110111"), 5);
    const bool example = p.K == 4 && p.central_copies == 1 && to_string(p.n) == "10111101101111101111011";
    const auto scan = analysis::k_bound_scan(Alphabet(2), 10, 0, {}, jobs);
    const double secs = seconds_since(t0);
    r.passed = example && scan.violations == 0 && scan.max_K <= 4 && secs < 300;
    r.detail = "example K = " + std::to_string(p.K) + ", scan of " + std::to_string(scan.words_scanned) +
               " words at k = " + std::to_string(scan.k) + ": max K " + std::to_string(scan.max_K) + ", " +
               std::to_string(scan.violations) + " violations, " + std::to_string(scan.unstable.size()) +
               " unstable, " + fmt("%.1f s", secs);
    return r;
}

CriterionResult lyndon_theorem(unsigned jobs) {
    CriterionResult r{11, "Lyndon suffix theorem", false, "", 0};
    const auto t0 = Clock::now();
    const auto rep = analysis::lyndon_suffix_check(Alphabet(2), 14, {}, jobs);
    const double secs = seconds_since(t0);
    r.passed = rep.holds && secs < 60;
    r.detail = std::to_string(rep.words_checked) + " words, hypothesis met by " +
               std::to_string(rep.hypothesis_count) + ", " + fmt("%.1f s", secs);
    if (rep.counterexample) r.detail += ", counterexample " + to_string(*rep.counterexample);
    return r;
}

CriterionResult property_suites() {
    CriterionResult r{12, "property suites", false, "", 0};
    const Alphabet bin(2);
    std::size_t suffix_bad = 0, last_bad = 0, growth_bad = 0;
    MelanconOptions checked;
    checked.check_growth = true;
    for (std::size_t len = 1; len <= 12; ++len) {
        for (const auto& w : all_words(bin, len)) {
            const bool nyl = is_nyldon(w);
            std::optional<Word> longest;
            for (std::size_t start = 1; start < len; ++start) {
                const Word s = w.substr(start, len - start);
                if (!is_nyldon(s)) continue;
                if (!longest) longest = s;
                if (nyl && !(s < w)) ++suffix_bad;
            }
            const auto f = nyldon_factorize(w).factors;
            const Word expected_last = nyl ? w : *longest;
            if (f.back() != expected_last) ++last_bad;
            try {
                factorize(w, lex_policy(), checked);
                if (is_primitive(w)) conjugate(w, lex_policy(), checked);
            } catch (const PolicyViolationError&) {
                ++growth_bad;
            }
        }
    }
    const auto nyldon_set = hallsets::generate(lex_policy(), bin, 7);
    const auto right = hallsets::verify_hall(nyldon_set, lex_policy());
    hallsets::GenerateOptions lax;
    lax.enforce_nyldon_like = false;
    const auto lyndon_set = hallsets::generate(lyndon_policy(), bin, 7, {}, lax);
    const auto viennot = hallsets::verify_hall(lyndon_set, lyndon_policy());
    bool lyndon_members = true;
    for (const auto& w : lyndon_set.members) lyndon_members = lyndon_members && is_lyndon(w);

    r.passed = suffix_bad == 0 && last_bad == 0 && growth_bad == 0 && right.is_right_hall && viennot.is_viennot &&
               lyndon_members && lyndon_set.size() == 41;
    r.detail = "suffix lemma " + std::to_string(suffix_bad) + " failures, last factor " + std::to_string(last_bad) +
               " failures, growth " + std::to_string(growth_bad) + " failures, Nyldon<=7 right Hall " +
               (right.is_right_hall ? "yes" : "no") + ", Lyndon<=7 Viennot " + (viennot.is_viennot ? "yes" : "no");
    return r;
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& options,
                                     const std::function<void(const CriterionResult&)>& on_result) {
    const std::vector<std::function<CriterionResult()>> criteria = {
        table1_reproduction,
        worked_examples,
        oracle_equivalence,
        unique_conjugate,
        comparison_bound,
        table2_reproduction,
        lazard_propositions,
        kraft_mcmillan,
        [&] { return circular_codes(options.jobs); },
        [&] { return power_bound(options.jobs); },
        [&] { return lyndon_theorem(options.jobs); },
        property_suites,
    };
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        CriterionResult r;
        try {
            r = criteria[i]();
        } catch (const std::exception& e) {
            r.id = static_cast<int>(i + 1);
            r.name = "criterion " + std::to_string(i + 1);
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = seconds_since(t0);
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::string format(const CriterionResult& r) {
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d %s (%.2f s): ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.seconds);
    return head + r.detail;
}

}  // namespace nyldon::acceptance
