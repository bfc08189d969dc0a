#include "balword/cli.hpp"

#include "balword/balance.hpp"
#include "balword/constant_gap.hpp"
#include "balword/errors.hpp"
#include "balword/json_io.hpp"
#include "balword/search.hpp"
#include "balword/wordgen.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace balword::cli {

using nlohmann::json;

void to_json(json& j, const RunManifest& m) {
    j = json{{"command", m.command},
             {"params", m.params},
             {"version", m.version},
             {"elapsedMs", m.elapsed_ms},
             {"summary", m.summary}};
}

void from_json(const json& j, RunManifest& m) {
    m.command = j.at("command").get<std::string>();
    m.params = j.at("params");
    m.version = j.at("version").get<std::string>();
    m.elapsed_ms = j.at("elapsedMs").get<double>();
    m.summary = j.at("summary");
}

void to_json(json& j, const ClaimCheck& c) { j = json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }
void from_json(const json& j, ClaimCheck& c) {
    c.name = j.at("name").get<std::string>();
    c.passed = j.at("passed").get<bool>();
    c.detail = j.at("detail").get<std::string>();
}

void to_json(json& j, const ClaimReport& r) {
    j = json{{"k", r.k},
             {"length", r.length},
             {"maxPeriod", r.p_max},
             {"estimate", r.estimate},
             {"target", r.target},
             {"windowFloor", r.window_floor},
             {"checks", r.checks},
             {"passed", r.passed()}};
}

void from_json(const json& j, ClaimReport& r) {
    r.k = j.at("k").get<unsigned>();
    r.length = j.at("length").get<std::size_t>();
    r.p_max = j.at("maxPeriod").get<std::size_t>();
    r.estimate = j.at("estimate").get<CriticalExponent>();
    r.target = j.at("target").get<QuadraticNumber>();
    r.window_floor = j.at("windowFloor").get<QuadraticNumber>();
    r.checks = j.at("checks").get<std::vector<ClaimCheck>>();
}

QuadraticNumber claim_target(unsigned k) {
    if (k < 3 || k > 10) throw UnsupportedK("claims cover 3 <= k <= 10, got k = " + std::to_string(k));
    if (k == 3) return QuadraticNumber(Rational(2), Rational(1, 2), 2);
    if (k == 4) return QuadraticNumber(Rational(5, 4), Rational(1, 4), 5);
    return QuadraticNumber(Rational(k - 2, k - 3));
}

QuadraticNumber claim_window_floor(unsigned k) {
    if (k == 3) return QuadraticNumber(Rational(27, 10));
    if (k == 4) return QuadraticNumber(Rational(9, 5));
    return claim_target(k) - QuadraticNumber(Rational(1, 50));
}

bool ClaimReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.passed; });
}

namespace {

std::string describe(const QuadraticNumber& x) {
    std::ostringstream out;
    out << x.to_string() << " (~" << x.to_double() << ")";
    return out.str();
}

std::string describe(const Rational& r) {
    std::ostringstream out;
    out << to_string(r) << " (~" << r.convert_to<double>() << ")";
    return out.str();
}

// x_4: every qualifying run obeys the law. x_3: every law period up to p_max
// is present with the law exponent (other squares may occur as well).
ClaimCheck closed_form_check(const WordSpec& spec, const ClaimOptions& options, const CriticalExponent& estimate) {
    const bool every_run = spec.law == RepetitionLaw::doubled_standard;
    const Rational e_min = every_run ? Rational(5, 3) : Rational(2);
    const auto records = walnut_emulation_report(spec, options.length, e_min, options.p_max);
    std::ostringstream detail;
    bool ok = !records.empty();
    bool witness_listed = false;
    for (const auto& rec : records) {
        if (every_run && (!rec.matches_law || !rec.uniform_length)) {
            ok = false;
            detail << "period " << rec.period << " length " << rec.n + rec.period << " breaks the law; ";
        }
        witness_listed = witness_listed || (rec.matches_law && rec.period == estimate.witness.period &&
                                            rec.exponent() == estimate.value);
    }
    if (!every_run) {
        const ConvergentTable table(spec.cf, 64);
        for (long j = 1; j < 63; ++j) {
            const BigInt p = table.q(j - 1) + table.q(j);
            if (p > options.p_max) break;
            if (table.q(j) <= 2) continue;
            const bool present = std::any_of(records.begin(), records.end(), [&](const PeriodLawRecord& rec) {
                return rec.matches_law && BigInt(rec.period) == p;
            });
            if (!present) {
                ok = false;
                detail << "law period " << p << " missing; ";
            }
        }
    }
    if (!witness_listed) {
        ok = false;
        detail << "estimate witness period " << estimate.witness.period << " is not a law period; ";
    }
    detail << records.size() << " periods with exponent above " << to_string(e_min) << ":";
    for (const auto& rec : records) {
        detail << ' ' << rec.period << "->" << to_string(rec.exponent()) << (rec.matches_law ? "" : "*");
    }
    return {"closed-form", ok, detail.str()};
}

}  // namespace

ClaimReport verify_claims(unsigned k, const ClaimOptions& options) {
    const WordSpec spec = table1_spec(k);
    const FiniteWord word = generate(spec, options.length);

    ClaimReport report;
    report.k = k;
    report.length = options.length;
    report.p_max = options.p_max;
    report.target = claim_target(k);
    report.window_floor = claim_window_floor(k);

    const std::size_t window = std::min(options.balance_window, word.size());
    const BalanceReport balance = check_balance(word, window);
    report.checks.push_back({"balance", balance.balanced,
                             balance.balanced ? "no violation up to window " + std::to_string(window)
                                              : "violation at window length " + std::to_string(balance.violation->length)});

    report.estimate = critical_exponent_estimate(word, options.p_max, BoundaryPolicy::exclude_right_open,
                                                 ScanOptions{options.threads});
    const QuadraticNumber value(report.estimate.value);
    const bool below = options.inclusive ? value <= report.target : value < report.target;
    report.checks.push_back({options.inclusive ? "at-most-target" : "below-target", below,
                             "estimate " + describe(report.estimate.value) + " vs target " + describe(report.target)});
    report.checks.push_back({"window", value > report.window_floor,
                             "estimate " + describe(report.estimate.value) + " vs floor " + describe(report.window_floor)});
    if (spec.law != RepetitionLaw::none) report.checks.push_back(closed_form_check(spec, options, report.estimate));
    return report;
}

void require_pass(const ClaimReport& report) {
    for (const auto& c : report.checks) {
        if (!c.passed) throw ClaimFailed("k=" + std::to_string(report.k) + " " + c.name + ": " + c.detail);
    }
}

namespace {

struct CommandResult {
    int code = exit_pass;
    json payload;
    std::string text;
    json summary;
};

struct GlobalOptions {
    bool json_output = false;
    bool seedless = false;
    unsigned threads = 1;
};

struct WordSource {
    std::optional<unsigned> table1;
    std::string cf;
    std::string y = "0";
    std::string y_prime = "1";
    std::size_t length = 0;

    void add_to(CLI::App& cmd) {
        auto* t = cmd.add_option("--table1", table1, "construction table row k (3..10)");
        cmd.add_option("--cf", cf, "slope as [0;a,b,(p,q)]")->excludes(t);
        cmd.add_option("--y", y, "constant-gap root replacing the 0's");
        cmd.add_option("--yp", y_prime, "constant-gap root replacing the 1's");
        cmd.add_option("--length", length, "prefix length")->required()->check(CLI::PositiveNumber);
    }

    WordSpec spec() const {
        if (table1) return table1_spec(*table1);
        if (cf.empty()) throw InvalidArgument("one of --table1 or --cf is required");
        const FiniteWord yw = FiniteWord::from_string(y);
        const FiniteWord ypw = FiniteWord::from_string(y_prime);
        std::set<Letter> letters(yw.letters().begin(), yw.letters().end());
        letters.insert(ypw.letters().begin(), ypw.letters().end());
        WordSpec s{unsigned(letters.size()), ContinuedFraction::parse(cf), ConstantGapWord(yw), ConstantGapWord(ypw),
                   RepetitionLaw::none};
        s.validate();
        return s;
    }

    json params() const {
        json j{{"length", length}};
        if (table1) {
            j["table1"] = *table1;
        } else {
            j["cf"] = cf;
            j["y"] = y;
            j["yp"] = y_prime;
        }
        return j;
    }
};

std::vector<Letter> parse_alphabet(const std::string& text) {
    std::vector<Letter> out;
    if (text.size() == 3 && text[1] == '-' && std::isdigit(text[0]) && std::isdigit(text[2])) {
        for (char c = text[0]; c <= text[2]; ++c) out.push_back(Letter(c - '0'));
    } else {
        for (char c : text) {
            if (c == ',') continue;
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad alphabet '" + text + "'");
            out.push_back(Letter(c - '0'));
        }
    }
    std::sort(out.begin(), out.end());
    if (out.empty() || std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw ParseError("alphabet must list distinct letters: '" + text + "'");
    }
    return out;
}

std::string rational_text(const Rational& r) { return to_string(r); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Balanced words, critical exponents and Ostrowski automata", "balword"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    GlobalOptions global;
    app.add_flag("--json", global.json_output, "machine-readable output");
    app.add_flag("--seedless", global.seedless, "assert that no randomness is used");
    app.add_option("--threads", global.threads, "worker threads")->check(CLI::Range(1u, 256u));

    std::function<CommandResult()> action;
    json params;

    // gen
    WordSource gen_src;
    auto* gen = app.add_subcommand("gen", "print a prefix of x_k or of a custom construction");
    gen_src.add_to(*gen);
    gen->callback([&] {
        action = [&] {
            const FiniteWord w = generate(gen_src.spec(), gen_src.length);
            CommandResult r;
            r.payload = json{{"word", w}};
            r.text = w.to_string() + "\n";
            r.summary = json{{"length", w.size()}};
            return r;
        };
        params = gen_src.params();
    });

    // balance
    WordSource bal_src;
    std::size_t max_window = 200;
    auto* bal = app.add_subcommand("balance", "check the balance property on a prefix");
    bal_src.add_to(*bal);
    bal->add_option("--max-window", max_window, "largest window length")->check(CLI::PositiveNumber);
    bal->callback([&] {
        action = [&] {
            const FiniteWord w = generate(bal_src.spec(), bal_src.length);
            const BalanceReport rep = check_balance(w, std::min(max_window, w.size()));
            CommandResult r;
            r.payload = rep;
            r.summary = json{{"balanced", rep.balanced}};
            std::ostringstream text;
            if (rep.balanced) {
                text << "balanced (windows up to " << rep.checked_up_to << ")\n";
            } else {
                const auto& v = *rep.violation;
                text << "unbalanced: letter " << int(v.letter) << ", length " << v.length << ", windows at " << v.i
                     << " and " << v.j << " hold " << v.count_i << " and " << v.count_j << "\n";
                r.code = exit_failure;
            }
            r.text = text.str();
            return r;
        };
        params = bal_src.params();
        params["maxWindow"] = max_window;
    });

    // analyze
    WordSource an_src;
    std::size_t max_period = 1000;
    std::string min_exponent = "2";
    std::string policy = "exclude";
    bool laws = false;
    auto* an = app.add_subcommand("analyze", "maximal repetitions and the critical exponent estimate");
    an_src.add_to(*an);
    an->add_option("--max-period", max_period, "largest period scanned")->check(CLI::PositiveNumber);
    an->add_option("--min-exponent", min_exponent, "report runs with exponent >= R (a/b or decimal)");
    an->add_option("--policy", policy, "runs touching the end: include|exclude")
        ->check(CLI::IsMember({"include", "exclude"}));
    an->add_flag("--laws", laws, "aggregate runs per period and compare with the closed-form law");
    an->callback([&] {
        action = [&] {
            const WordSpec spec = an_src.spec();
            const FiniteWord w = generate(spec, an_src.length);
            const Rational e_min = parse_rational(min_exponent);
            const ScanOptions scan{global.threads};
            const auto runs = maximal_repetitions(w, max_period, e_min, scan);
            const auto bp = policy == "include" ? BoundaryPolicy::include_right_open : BoundaryPolicy::exclude_right_open;
            const CriticalExponent ce = critical_exponent_estimate(w, max_period, bp, scan);
            CommandResult r;
            r.payload = json{{"runs", runs}, {"critical", ce}};
            std::ostringstream text;
            text << "critical exponent estimate " << describe(ce.value) << " at start " << ce.witness.start
                 << " period " << ce.witness.period << " length " << ce.witness.length << "\n";
            text << runs.size() << " maximal runs with exponent >= " << rational_text(e_min) << "\n";
            for (const auto& run : runs) {
                text << "start " << run.start << " period " << run.period << " length " << run.length << " exponent "
                     << rational_text(run.exponent()) << (run.right_open ? " (right-open)" : "") << "\n";
            }
            if (laws) {
                const auto records = walnut_emulation_report(spec, an_src.length, e_min, max_period);
                r.payload["laws"] = records;
                for (const auto& rec : records) {
                    text << "period " << rec.period << " n " << rec.n << " exponent " << rational_text(rec.exponent())
                         << (rec.matches_law ? " law" : " no-law") << "\n";
                }
            }
            r.text = text.str();
            r.summary = json{{"runs", runs.size()}, {"estimate", ce.value}};
            return r;
        };
        params = an_src.params();
        params["maxPeriod"] = max_period;
        params["minExponent"] = min_exponent;
        params["policy"] = policy;
        params["laws"] = laws;
    });

    // cgap
    std::string alphabet_text = "0-2";
    std::optional<std::size_t> gap_bound;
    bool list = false;
    std::string check_root;
    auto* cg = app.add_subcommand("cgap", "enumerate or check constant-gap words");
    cg->add_option("--alphabet", alphabet_text, "letters, e.g. 0-4 or 0123");
    cg->add_option("--gap-bound", gap_bound, "largest gap (default 2^(n-1))");
    cg->add_flag("--list", list, "print every root");
    cg->add_option("--check", check_root, "test one root instead of enumerating");
    cg->callback([&] {
        action = [&] {
            CommandResult r;
            if (!check_root.empty()) {
                const auto verdict = is_constant_gap(FiniteWord::from_string(check_root));
                if (const auto* cgw = std::get_if<ConstantGapWord>(&verdict)) {
                    json gaps = json::object();
                    for (const auto& [a, g] : cgw->gaps()) gaps[std::to_string(a)] = g;
                    r.payload = json{{"constantGap", true}, {"root", cgw->root()}, {"gaps", gaps}};
                    r.text = "constant gap, root " + cgw->root().to_string() + "\n";
                } else {
                    const auto& v = std::get<GapViolation>(verdict);
                    r.payload = json{{"constantGap", false},
                                     {"letter", v.letter},
                                     {"gaps", {v.first_gap, v.second_gap}},
                                     {"positions", v.positions}};
                    r.text = "not constant gap: letter " + std::to_string(v.letter) + " has gaps " +
                             std::to_string(v.first_gap) + " and " + std::to_string(v.second_gap) + "\n";
                    r.code = exit_failure;
                }
                r.summary = json{{"constantGap", r.code == exit_pass}};
                return r;
            }
            const auto alphabet = parse_alphabet(alphabet_text);
            const auto roots = enumerate_constant_gap(alphabet, gap_bound);
            r.payload = json{{"alphabet", alphabet},
                             {"gapBound", gap_bound.value_or(default_gap_bound(alphabet.size()))},
                             {"count", roots.size()}};
            std::ostringstream text;
            text << roots.size() << " constant-gap roots\n";
            if (list) {
                r.payload["roots"] = roots;
                for (const auto& w : roots) text << w.to_string() << "\n";
            }
            r.text = text.str();
            r.summary = json{{"count", roots.size()}};
            return r;
        };
        params = json{{"alphabet", alphabet_text}, {"list", list}, {"check", check_root}};
        if (gap_bound) params["gapBound"] = *gap_bound;
    });

    // search
    SearchConfig search_config;
    std::string bound_text = "5/2";
    std::string log_path;
    bool verify = false;
    auto* se = app.add_subcommand("search", "prove a lower bound over the standard-pair tree");
    se->add_option("--k", search_config.k, "alphabet size")->check(CLI::Range(2u, 10u));
    se->add_option("--bound", bound_text, "exponent bound B (a/b or decimal)");
    se->add_option("--max-nodes", search_config.max_nodes, "node cap")->check(CLI::PositiveNumber);
    se->add_option("--max-depth", search_config.max_depth, "depth cap");
    se->add_option("--gap-bound", search_config.gap_bound, "largest gap in the substitution family");
    se->add_option("--log", log_path, "write the proof log (one JSON record per pruned node)");
    se->add_flag("--verify", verify, "re-check every prune record independently");
    se->callback([&] {
        action = [&] {
            search_config.bound = parse_rational(bound_text);
            search_config.threads = global.threads;
            search_config.record_log = verify || !log_path.empty();
            const SearchOutcome outcome = prove_lower_bound(search_config);
            CommandResult r;
            r.code = outcome.status == SearchStatus::proved ? exit_pass : exit_exhausted;
            std::size_t bad = 0;
            std::string first_bad;
            if (verify) {
                const auto family = substitution_family(search_config.k, search_config.gap_bound);
                for (const auto& rec : outcome.log) {
                    const std::string why = verify_prune_record(rec, search_config, family);
                    if (!why.empty() && bad++ == 0) first_bad = "node " + std::to_string(rec.node_id) + ": " + why;
                }
                if (bad > 0) r.code = exit_failure;
            }
            if (!log_path.empty()) {
                std::ofstream log(log_path);
                if (!log) throw InvalidArgument("cannot write '" + log_path + "'");
                for (const auto& rec : outcome.log) log << json(rec).dump() << '\n';
            }
            json summary = outcome;
            summary.erase("log");
            summary.erase("longerWordLengths");
            if (verify) summary["invalidRecords"] = bad;
            r.payload = summary;
            r.summary = json{{"status", summary["status"]}, {"nodesExpanded", outcome.nodes_expanded}};
            std::ostringstream text;
            text << (outcome.status == SearchStatus::proved ? "proved" : "resource exhausted") << ": k=" << search_config.k
                 << " bound " << rational_text(search_config.bound) << ", " << outcome.nodes_expanded << " nodes expanded, "
                 << outcome.nodes_pruned << " pruned, max depth " << outcome.max_depth_seen << ", frontier "
                 << outcome.frontier_size << "\n";
            if (verify) text << (bad == 0 ? "all prune records verified\n" : std::to_string(bad) + " invalid records; " + first_bad + "\n");
            r.text = text.str();
            return r;
        };
        params = json{{"k", search_config.k},     {"bound", bound_text}, {"maxNodes", search_config.max_nodes},
                      {"maxDepth", search_config.max_depth}, {"log", log_path},  {"verify", verify}};
        if (search_config.gap_bound) params["gapBound"] = *search_config.gap_bound;
    });

    // dfao
    WordSource df_src;
    std::uint64_t check_n = 0;
    std::string emit = "none";
    std::string order = "lsd";
    std::string out_path;
    std::optional<std::uint64_t> weights_modulus;
    auto* df = app.add_subcommand("dfao", "synthesize the Ostrowski automaton for a construction");
    df->add_option("--table1", df_src.table1, "construction table row k (3..10)");
    df->add_option("--cf", df_src.cf, "slope as [0;a,b,(p,q)]");
    df->add_option("--y", df_src.y, "constant-gap root replacing the 0's");
    df->add_option("--yp", df_src.y_prime, "constant-gap root replacing the 1's");
    df->add_option("--check", check_n, "compare with direct generation on 1..N");
    df->add_option("--emit", emit, "none|text|dot|json")->check(CLI::IsMember({"none", "text", "dot", "json"}));
    df->add_option("--order", order, "lsd|msd")->check(CLI::IsMember({"lsd", "msd"}));
    df->add_option("--out", out_path, "write the emitted automaton to a file");
    df->add_option("--weights", weights_modulus, "report weight periods mod M")->check(CLI::PositiveNumber);
    df->callback([&] {
        action = [&] {
            const WordSpec spec = df_src.spec();
            Dfao dfao = synthesize(spec.cf, spec.y, spec.y_prime);
            if (order == "msd") dfao = reverse_reading_order(dfao);
            CommandResult r;
            std::ostringstream text;
            r.payload = json{{"states", dfao.num_states()},
                             {"digitBound", dfao.digit_bound},
                             {"order", order},
                             {"stateBound", synthesis_state_bound(spec.cf, spec.y, spec.y_prime)}};
            text << dfao.num_states() << " states, digits 0.." << dfao.digit_bound << ", order " << order << "\n";
            if (weights_modulus) {
                r.payload["weights"] = weight_periods(spec.cf, *weights_modulus);
                text << "weights " << r.payload["weights"].dump() << "\n";
            }
            if (check_n > 0) {
                const EquivalenceResult eq = equivalence_check(dfao, spec, check_n);
                r.payload["equivalence"] = eq;
                if (eq.ok) {
                    text << "agrees with direct generation on 1.." << check_n << "\n";
                } else {
                    text << "first mismatch at n = " << *eq.first_mismatch << "\n";
                    r.code = exit_failure;
                }
            }
            std::string emitted;
            if (emit == "text") emitted = emit_text(dfao);
            if (emit == "dot") emitted = emit_dot(dfao, "x" + std::to_string(spec.k));
            if (emit == "json") emitted = json(dfao).dump(2) + "\n";
            if (!emitted.empty()) {
                if (!out_path.empty()) {
                    std::ofstream file(out_path);
                    if (!file) throw InvalidArgument("cannot write '" + out_path + "'");
                    file << emitted;
                } else {
                    r.payload["automaton"] = emitted;
                    text << emitted;
                }
            }
            r.text = text.str();
            r.summary = json{{"states", dfao.num_states()}, {"ok", r.code == exit_pass}};
            return r;
        };
        params = df_src.params();
        params.erase("length");
        params["check"] = check_n;
        params["emit"] = emit;
        params["order"] = order;
    });

    // verify-claims
    std::string k_text = "all";
    ClaimOptions claim_options;
    auto* vc = app.add_subcommand("verify-claims", "check balance and critical-exponent claims for x_k");
    vc->add_option("--k", k_text, "3..10 or all");
    vc->add_option("--length", claim_options.length, "prefix length")->check(CLI::PositiveNumber);
    vc->add_option("--max-period", claim_options.p_max, "largest period scanned")->check(CLI::PositiveNumber);
    vc->add_option("--max-window", claim_options.balance_window, "balance window")->check(CLI::PositiveNumber);
    vc->add_flag("--inclusive", claim_options.inclusive, "accept an estimate equal to the target");
    vc->callback([&] {
        action = [&] {
            claim_options.threads = global.threads;
            std::vector<unsigned> ks;
            if (k_text == "all") {
                for (unsigned k = 3; k <= 10; ++k) ks.push_back(k);
            } else {
                try {
                    ks.push_back(unsigned(std::stoul(k_text)));
                } catch (const std::exception&) {
                    throw InvalidArgument("--k expects 3..10 or all, got '" + k_text + "'");
                }
            }
            CommandResult r;
            json reports = json::array();
            std::ostringstream text;
            bool all = true;
            for (unsigned k : ks) {
                const ClaimReport rep = verify_claims(k, claim_options);
                reports.push_back(rep);
                all = all && rep.passed();
                for (const auto& c : rep.checks) {
                    text << "k=" << k << " " << c.name << ": " << (c.passed ? "pass" : "FAIL") << " - " << c.detail << "\n";
                }
            }
            r.code = all ? exit_pass : exit_failure;
            r.payload = json{{"reports", reports}, {"passed", all}};
            r.summary = json{{"passed", all}};
            r.text = text.str();
            return r;
        };
        params = json{{"k", k_text},
                      {"length", claim_options.length},
                      {"maxPeriod", claim_options.p_max},
                      {"maxWindow", claim_options.balance_window},
                      {"inclusive", claim_options.inclusive}};
    });

    for (auto* sub : {gen, bal, an, cg, se, df, vc}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    RunManifest manifest;
    manifest.command = app.get_subcommands().front()->get_name();
    manifest.params = params;
    manifest.params["threads"] = global.threads;
    manifest.params["seedless"] = global.seedless;

    const auto started = std::chrono::steady_clock::now();
    CommandResult result;
    try {
        result = action();
    } catch (const ClaimFailed& e) {
        err << "claim failed: " << e.what() << "\n";
        return exit_failure;
    } catch (const StateLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return exit_exhausted;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_failure;
    }
    manifest.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    manifest.summary = result.summary;
    manifest.summary["exitCode"] = result.code;

    if (global.json_output) {
        out << json{{"manifest", manifest}, {"payload", result.payload}}.dump(2) << "\n";
    } else {
        out << result.text;
        err << "manifest " << json(manifest).dump() << "\n";
    }
    return result.code;
}

}  // namespace balword::cli
