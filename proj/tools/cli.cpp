#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "nyldon/analysis.hpp"
#include "nyldon/fastfactor.hpp"
#include "nyldon/hallsets.hpp"
#include "nyldon/lazard.hpp"
#include "nyldon/melancon.hpp"
#include "nyldon/oracle.hpp"

namespace nyldon::cli {
namespace {

using json = nlohmann::json;

struct Config {
    std::size_t alphabet = 2;
    std::size_t max_len = 0;
    std::string algorithm = "fast";
    std::string policy = "lex";
    bool json = false;
    unsigned jobs = 1;
    std::size_t max_blocks = 3;
    std::size_t kraft = 0;
    bool trace = false;

    // subcommand arguments
    std::string word;
    std::vector<std::string> words;
    bool linear = false;
    std::size_t power = 0;
    std::size_t length = 0;
    std::size_t samples = 3;
    std::uint64_t seed = 1;
};

std::string join(const std::vector<Word>& ws, std::string_view sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += sep;
        out += to_string(ws[i]);
    }
    return out;
}

json words_json(const std::vector<Word>& ws) {
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(to_string(w));
    return arr;
}

// Shorter words first, lexicographic within a length (the order of the
// tables in the literature).
std::vector<Word> by_length(const std::set<Word>& words) {
    std::vector<Word> out(words.begin(), words.end());
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

class Runner {
public:
    Runner(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out), alphabet_(cfg.alphabet) {}

    Word word(const std::string& text) const { return parse_word(text, alphabet_); }
    OrderPolicy policy() const { return policy_by_id(cfg_.policy); }
    Budget budget() const { return Budget::from_env(); }

    void require_lex(std::string_view what) const {
        if (cfg_.policy != "lex") {
            throw PreconditionError(std::string(what) + " with --algorithm fast supports only --policy lex");
        }
    }
    std::size_t max_len(std::size_t fallback) const { return cfg_.max_len ? cfg_.max_len : fallback; }

    int factor() {
        const Word w = word(cfg_.word);
        Factorization f;
        if (cfg_.algorithm == "naive") {
            f = oracle::g_factorization_bruteforce(w, policy());
        } else if (cfg_.algorithm == "fast") {
            require_lex("factor");
            f = nyldon_factorize(w);
        } else {
            f = factorize(w, policy());
        }
        if (cfg_.json) {
            out_ << json{{"word", cfg_.word},
                         {"policy", cfg_.policy},
                         {"algorithm", cfg_.algorithm},
                         {"factors", words_json(f.factors)}}
                        .dump()
                 << '\n';
        } else {
            out_ << to_string(f) << '\n';
        }
        return ok;
    }

    int is_member() {
        const Word w = word(cfg_.word);
        bool member;
        if (cfg_.algorithm == "naive") {
            member = oracle::is_g_word_bruteforce(w, policy());
        } else if (cfg_.algorithm == "fast") {
            require_lex("is-member");
            member = is_nyldon(w);
        } else {
            member = factorize(w, policy()).size() == 1;
        }
        if (cfg_.json) {
            out_ << json{{"word", cfg_.word}, {"policy", cfg_.policy}, {"member", member}}.dump() << '\n';
        } else {
            out_ << yes_no(member) << '\n';
        }
        return ok;
    }

    int conjugate_cmd() {
        const Word w = word(cfg_.word);
        if (w.empty()) throw PreconditionError("conjugate: empty word");
        if (!is_primitive(w)) throw NotPrimitiveError(to_string(primitive_root(w)));
        Word n;
        if (cfg_.algorithm == "melancon") {
            n = conjugate(w, policy());
        } else {
            if (cfg_.algorithm == "fast") require_lex("conjugate");
            const auto p = policy();
            std::vector<Word> hits;
            for (const auto& r : conjugates(w)) {
                const bool member = cfg_.algorithm == "fast" ? is_nyldon(r) : oracle::is_g_word_bruteforce(r, p);
                if (member) hits.push_back(r);
            }
            if (hits.size() != 1) throw std::logic_error("conjugate: expected exactly one member rotation");
            n = hits.front();
        }
        if (cfg_.json) {
            out_ << json{{"word", cfg_.word}, {"policy", cfg_.policy}, {"conjugate", to_string(n)}}.dump() << '\n';
        } else {
            out_ << to_string(n) << '\n';
        }
        return ok;
    }

    int trace() {
        const Word w = word(cfg_.word);
        const auto mode = cfg_.linear ? ChainMode::linear : ChainMode::circular;
        const auto snaps = contraction_trace(w, policy(), mode);
        // The chain empties in linear mode; the last pass only emits.
        std::vector<Word> result;
        if (cfg_.linear) {
            result = factorize(w, policy()).factors;
        } else {
            result = snaps.back().blocks;
        }
        if (cfg_.json) {
            json passes = json::array();
            for (const auto& s : snaps) {
                passes.push_back({{"blocks", words_json(s.blocks)}, {"emitted", words_json(s.emitted)}});
            }
            out_ << json{{"word", cfg_.word},
                         {"mode", cfg_.linear ? "linear" : "circular"},
                         {"passes", passes},
                         {"result", words_json(result)}}
                        .dump()
                 << '\n';
            return ok;
        }
        for (std::size_t i = 0; i < snaps.size(); ++i) {
            out_ << i + 1 << ". " << join(snaps[i].blocks);
            if (!snaps[i].emitted.empty()) out_ << "  [factors: " << join(snaps[i].emitted) << ']';
            out_ << '\n';
        }
        out_ << (cfg_.linear ? "factorization: (" : "conjugate: ") << join(result)
             << (cfg_.linear ? ")" : "") << '\n';
        return ok;
    }

    int enumerate() {
        const std::size_t n = max_len(7);
        oracle::GeneratedSet set;
        if (cfg_.algorithm == "naive") {
            set = oracle::enumerate_generated(policy(), alphabet_, n, budget());
        } else if (cfg_.algorithm == "fast") {
            require_lex("enumerate");
            budget().require_items(words_up_to(alphabet_.size(), n), "enumerate");
            set = {alphabet_, n, "lex", {}};
            for (std::size_t len = 1; len <= n; ++len) {
                for (auto& w : all_words(alphabet_, len)) {
                    if (is_nyldon(w)) set.members.insert(std::move(w));
                }
            }
        } else {
            set = hallsets::generate(policy(), alphabet_, n, budget());
        }
        if (cfg_.json) {
            auto counts = set.counts_by_length();
            counts.erase(counts.begin());
            out_ << json{{"alphabet", alphabet_.size()},
                         {"max_len", n},
                         {"policy", cfg_.policy},
                         {"count", set.size()},
                         {"counts_by_length", counts},
                         {"words", words_json(by_length(set.members))}}
                        .dump()
                 << '\n';
        } else {
            for (const auto& w : by_length(set.members)) out_ << to_string(w) << '\n';
        }
        return ok;
    }

    int verify_hall() {
        const std::size_t n = max_len(7);
        const auto p = policy();
        hallsets::GenerateOptions opts;
        opts.enforce_nyldon_like = false;  // reported in the verdict instead
        const auto set = hallsets::generate(p, alphabet_, n, budget(), opts);
        const auto v = hallsets::verify_hall(set, p, budget());
        if (cfg_.json) {
            json ces = json::array();
            for (const auto& c : v.counterexamples) {
                ces.push_back({{"f", to_string(c.f)}, {"g", to_string(c.g)}, {"clause", c.clause}});
            }
            json j{{"policy", v.policy_id},
                   {"truncation", v.truncation},
                   {"members", set.size()},
                   {"is_factorization", v.is_factorization},
                   {"is_right_hall", v.is_right_hall},
                   {"is_left_hall", v.is_left_hall},
                   {"is_viennot", v.is_viennot},
                   {"nyldon_like", v.nyldon_like_ok},
                   {"counterexamples", ces}};
            if (v.factorization_witness) j["factorization_witness"] = to_string(*v.factorization_witness);
            out_ << j.dump() << '\n';
            return ok;
        }
        out_ << "policy: " << v.policy_id << "\ntruncation: " << v.truncation << "\nmembers: " << set.size()
             << "\nfactorization: " << yes_no(v.is_factorization) << "\nright hall: " << yes_no(v.is_right_hall)
             << "\nleft hall: " << yes_no(v.is_left_hall) << "\nviennot: " << yes_no(v.is_viennot)
             << "\nnyldon-like: " << yes_no(v.nyldon_like_ok) << '\n';
        if (v.factorization_witness) out_ << "factorization witness: " << to_string(*v.factorization_witness) << '\n';
        for (const auto& c : v.counterexamples) {
            out_ << "counterexample (" << c.clause << "): f = " << to_string(c.f) << ", g = " << to_string(c.g)
                 << '\n';
        }
        return ok;
    }

    static std::string approx(const lazard::Rational& r) {
        using Float = boost::multiprecision::cpp_dec_float_50;
        const Float x = Float(boost::multiprecision::numerator(r)) / Float(boost::multiprecision::denominator(r));
        std::ostringstream s;
        s << std::setprecision(4) << x.convert_to<double>();
        return s.str();
    }

    int lazard_cmd() {
        const std::size_t n = max_len(5);
        if (!cfg_.trace && cfg_.kraft == 0) {
            const auto r = lazard::lazard_report(alphabet_, n, budget());
            print_report(r, json::array());
            return ok;
        }
        const auto trace = lazard::lazard_run(alphabet_, n, budget());
        const auto r = lazard::finishing_step(trace);
        json steps = json::array();
        for (const auto& s : trace) {
            if (s.done()) break;
            json row{{"step", s.step}, {"set", words_json(by_length(s.current))}, {"chosen", to_string(s.choice())}};
            if (cfg_.kraft) {
                const auto sum = lazard::kraft_sum(s, cfg_.kraft);
                const lazard::Rational deficit = 1 - sum;
                row["kraft"] = {{"L", cfg_.kraft}, {"deficit", approx(deficit)}, {"exact", deficit.str()}};
            }
            steps.push_back(row);
        }
        print_report(r, steps);
        return ok;
    }

    void print_report(const lazard::LazardReport& r, const json& steps) {
        if (cfg_.json) {
            json j{{"alphabet", alphabet_.size()},
                   {"n", r.n},
                   {"total_steps", r.total_steps},
                   {"finishing_step", r.finishing_step},
                   {"stop_word", r.stop_word ? json(to_string(*r.stop_word)) : json(nullptr)},
                   {"words_after_stop", r.words_after_stop}};
            if (!steps.empty()) j["steps"] = steps;
            out_ << j.dump() << '\n';
            return;
        }
        for (const auto& row : steps) {
            std::string set;
            for (const auto& w : row["set"]) set += (set.empty() ? "" : ", ") + w.get<std::string>();
            if (cfg_.trace) {
                out_ << std::setw(3) << row["step"].get<std::size_t>() << " | {" << set << "} | "
                     << row["chosen"].get<std::string>() << '\n';
            }
            if (row.contains("kraft")) {
                out_ << "    kraft L=" << cfg_.kraft << ": 1 - " << row["kraft"]["deficit"].get<std::string>()
                     << '\n';
            }
        }
        out_ << "total steps: " << r.total_steps << "\nfinishing step: " << r.finishing_step
             << "\nstop word: " << (r.stop_word ? to_string(*r.stop_word) : "-")
             << "\nwords after stop: " << r.words_after_stop << '\n';
    }

    int circular_check() {
        std::vector<Word> code;
        if (!cfg_.words.empty()) {
            for (const auto& t : cfg_.words) code.push_back(word(t));
        } else {
            if (cfg_.length == 0) throw PreconditionError("circular-check: give code words or --length");
            for (auto& w : all_words(alphabet_, cfg_.length)) {
                if (is_nyldon(w)) code.push_back(std::move(w));
            }
        }
        const auto v = analysis::circular_code_check(code, cfg_.max_blocks, budget(), cfg_.jobs);
        if (cfg_.json) {
            json j{{"code", words_json(v.code)},
                   {"max_blocks", v.max_blocks},
                   {"is_circular", v.is_circular},
                   {"sequences_checked", v.sequences_checked}};
            if (v.witness) {
                j["witness"] = {{"sequence", words_json(v.witness->sequence)},
                                {"offset", v.witness->offset},
                                {"rotated_parse", words_json(v.witness->rotated_parse)}};
            }
            out_ << j.dump() << '\n';
            return ok;
        }
        out_ << "code: {" << join(v.code) << "}\ncircular: " << yes_no(v.is_circular) << '\n';
        if (v.witness) {
            out_ << "witness: (" << join(v.witness->sequence) << ") rotated by " << v.witness->offset << " = ("
                 << join(v.witness->rotated_parse) << ")\n";
        }
        return ok;
    }

    static json profile_json(const analysis::PowerProfile& p) {
        return {{"w", to_string(p.w)},
                {"n", to_string(p.n)},
                {"k", p.k},
                {"prefix_factors", words_json(p.prefix_factors)},
                {"central_copies", p.central_copies},
                {"suffix_factors", words_json(p.suffix_factors)},
                {"K", p.K},
                {"bound", p.bound},
                {"within_bound", p.within_bound}};
    }

    int power_scan() {
        if (!cfg_.word.empty()) {
            const Word w = word(cfg_.word);
            const auto p = analysis::power_profile(w, cfg_.power ? cfg_.power : 5);
            if (cfg_.json) {
                out_ << profile_json(p).dump() << '\n';
            } else {
                out_ << "n: " << to_string(p.n) << "\nfactors: (" << join(p.prefix_factors) << ") n^"
                     << p.central_copies << " (" << join(p.suffix_factors) << ")\nK: " << p.K
                     << "\nbound: " << p.bound << '\n';
            }
            return ok;
        }
        const std::size_t n = max_len(10);
        const auto r = analysis::k_bound_scan(alphabet_, n, cfg_.power, budget(), cfg_.jobs);
        if (cfg_.json) {
            json j{{"max_len", r.max_len},
                   {"k", r.k},
                   {"words_scanned", r.words_scanned},
                   {"classes", r.classes},
                   {"max_K", r.max_K},
                   {"violations", r.violations},
                   {"violation_words", words_json(r.violation_words)},
                   {"no_central", words_json(r.no_central)},
                   {"unstable", words_json(r.unstable)}};
            if (r.max_K_witness) j["max_K_witness"] = to_string(*r.max_K_witness);
            out_ << j.dump() << '\n';
            return ok;
        }
        out_ << "max len: " << r.max_len << "\nk: " << r.k << "\nwords scanned: " << r.words_scanned
             << "\nconjugacy classes: " << r.classes << "\nmax K: " << r.max_K;
        if (r.max_K_witness) out_ << " (" << to_string(*r.max_K_witness) << ')';
        out_ << "\nviolations: " << r.violations << "\nwithout central n: " << r.no_central.size()
             << "\nunstable: " << r.unstable.size() << '\n';
        return ok;
    }

    int lyndon_check() {
        const auto r = analysis::lyndon_suffix_check(alphabet_, max_len(14), budget(), cfg_.jobs);
        if (cfg_.json) {
            json j{{"holds", r.holds}, {"words_checked", r.words_checked}, {"hypothesis_count", r.hypothesis_count}};
            if (r.counterexample) j["counterexample"] = to_string(*r.counterexample);
            out_ << j.dump() << '\n';
        } else {
            out_ << "holds: " << yes_no(r.holds) << "\nwords checked: " << r.words_checked
                 << "\nhypothesis satisfied: " << r.hypothesis_count << '\n';
            if (r.counterexample) out_ << "counterexample: " << to_string(*r.counterexample) << '\n';
        }
        return ok;
    }

    int selftest() {
        acceptance::Options opts;
        opts.jobs = cfg_.jobs;
        bool all = true;
        acceptance::run_all(opts, [&](const acceptance::CriterionResult& r) {
            all = all && r.passed;
            out_ << acceptance::format(r) << std::endl;
        });
        return all ? ok : domain_error;
    }

    int bench() {
        const std::size_t top = max_len(4096);
        std::mt19937_64 rng(cfg_.seed);
        std::uniform_int_distribution<Letter> letter(0, alphabet_.max_letter());
        out_ << "n,algorithm,comparisons,nanos\n";
        for (std::size_t n = 16; n <= top; n *= 2) {
            for (std::size_t s = 0; s < cfg_.samples; ++s) {
                std::vector<Letter> letters(n);
                for (auto& a : letters) a = letter(rng);
                const Word w(alphabet_, std::move(letters));
                row(n, "fast", [&] { return nyldon_factorize_counted(w, CompareMode::engine).comparisons; });
                row(n, "fast-naive", [&] { return nyldon_factorize_counted(w, CompareMode::naive).comparisons; });
                row(n, "melancon", [&] { return melancon_run(w, lex_policy(), ChainMode::linear).stats.comparisons; });
            }
        }
        return ok;
    }

private:
    template <class Fn>
    void row(std::size_t n, const char* name, Fn&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto comparisons = fn();
        const auto dt = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0);
        out_ << n << ',' << name << ',' << comparisons << ',' << dt.count() << '\n';
    }

    const Config& cfg_;
    std::ostream& out_;
    Alphabet alphabet_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Nyldon words and Nyldon-like Hall sets", "nyldon"};
    app.require_subcommand(1);

    app.add_option("--alphabet", cfg.alphabet, "alphabet size k (letters 0..k-1)")->check(CLI::Range(2, 1 << 20));
    app.add_option("--max-len", cfg.max_len, "length bound");
    app.add_option("--algorithm", cfg.algorithm, "naive | fast | melancon")
        ->check(CLI::IsMember({"naive", "fast", "melancon"}));
    app.add_option("--policy", cfg.policy, "order policy")->check(CLI::IsMember(policy_ids()));
    app.add_flag("--json", cfg.json, "JSON output");
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--max-blocks", cfg.max_blocks, "circular-check sequence length")->check(CLI::PositiveNumber);
    app.add_option("--kraft", cfg.kraft, "lazard: Kraft sums truncated at L")->check(CLI::PositiveNumber);
    app.add_flag("--trace", cfg.trace, "lazard: print every step");

    auto word_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("word", cfg.word, "word")->required();
        return sub;
    };
    auto* factor = word_cmd("factor", "nondecreasing factorization");
    auto* member = word_cmd("is-member", "membership test");
    auto* conj = word_cmd("conjugate", "the member conjugate of a primitive word");
    auto* trace = word_cmd("trace", "passes of Melancon's algorithm");
    trace->add_flag("--linear", cfg.linear, "factorization mode");

    auto plain = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };
    auto* enumerate = plain("enumerate", "all members up to --max-len");
    auto* hall = plain("verify-hall", "Hall set verdict for the generated set");
    auto* lazard = plain("lazard", "the right Lazard procedure");
    auto* circ = plain("circular-check", "circular code check");
    circ->add_option("words", cfg.words, "code words (default: Nyldon words of --length)");
    circ->add_option("--length", cfg.length, "use the Nyldon words of this length");
    auto* power = plain("power-scan", "K profile of one word or a scan");
    power->add_option("word", cfg.word, "profile this word instead of scanning");
    power->add_option("--power", cfg.power, "exponent k");
    auto* lyndon = plain("lyndon-check", "Lyndon suffix theorem check");
    auto* self = plain("selftest", "run the acceptance criteria");
    auto* bench = plain("bench", "CSV timings");
    bench->add_option("--samples", cfg.samples, "words per length");
    bench->add_option("--seed", cfg.seed, "random seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    }

    Runner r(cfg, out);
    try {
        if (factor->parsed()) return r.factor();
        if (member->parsed()) return r.is_member();
        if (conj->parsed()) return r.conjugate_cmd();
        if (trace->parsed()) return r.trace();
        if (enumerate->parsed()) return r.enumerate();
        if (hall->parsed()) return r.verify_hall();
        if (lazard->parsed()) return r.lazard_cmd();
        if (circ->parsed()) return r.circular_check();
        if (power->parsed()) return r.power_scan();
        if (lyndon->parsed()) return r.lyndon_check();
        if (self->parsed()) return r.selftest();
        if (bench->parsed()) return r.bench();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    }
    return usage_error;
}

}  // namespace nyldon::cli
