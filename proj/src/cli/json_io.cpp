#include "balword/json_io.hpp"

#include "balword/errors.hpp"

#include <limits>

namespace nlohmann {

void adl_serializer<balword::BigInt>::to_json(json& j, const balword::BigInt& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
        j = n.convert_to<std::int64_t>();
    } else {
        j = n.str();
    }
}

void adl_serializer<balword::BigInt>::from_json(const json& j, balword::BigInt& n) {
    if (j.is_string()) {
        try {
            n = balword::BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            throw balword::ParseError("bad integer string '" + j.get<std::string>() + "'");
        }
    } else if (j.is_number_unsigned()) {
        n = j.get<std::uint64_t>();
    } else if (j.is_number_integer()) {
        n = j.get<std::int64_t>();
    } else {
        throw balword::ParseError("expected an integer");
    }
}

void adl_serializer<balword::Rational>::to_json(json& j, const balword::Rational& r) {
    j = json{{"num", balword::numerator_of(r)}, {"den", balword::denominator_of(r)}};
}

void adl_serializer<balword::Rational>::from_json(const json& j, balword::Rational& r) {
    const auto num = j.at("num").get<balword::BigInt>();
    const auto den = j.at("den").get<balword::BigInt>();
    if (den == 0) throw balword::ParseError("zero denominator");
    r = balword::Rational(num, den);
}

}  // namespace nlohmann

namespace balword {

void to_json(json& j, const FiniteWord& w) { j = w.to_string(); }
void from_json(const json& j, FiniteWord& w) { w = FiniteWord::from_string(j.get<std::string>()); }

void to_json(json& j, const QuadraticNumber& x) {
    j = json{{"a", x.rational_part()}, {"b", x.surd_part()}, {"d", x.radicand()}, {"text", x.to_string()}};
}

void from_json(const json& j, QuadraticNumber& x) {
    x = QuadraticNumber(j.at("a").get<Rational>(), j.at("b").get<Rational>(), j.at("d").get<BigInt>());
}

void to_json(json& j, const Repetition& r) {
    j = json{{"start", r.start},
             {"period", r.period},
             {"length", r.length},
             {"exponent", r.exponent()},
             {"rightOpen", r.right_open}};
}

void from_json(const json& j, Repetition& r) {
    r.start = j.at("start").get<std::size_t>();
    r.period = j.at("period").get<std::size_t>();
    r.length = j.at("length").get<std::size_t>();
    r.right_open = j.value("rightOpen", false);
    if (r.period == 0) throw ParseError("repetition period must be positive");
    if (j.contains("exponent") && j["exponent"].get<Rational>() != r.exponent()) {
        throw ParseError("repetition exponent disagrees with length/period");
    }
}

void to_json(json& j, const CriticalExponent& c) { j = json{{"value", c.value}, {"witness", c.witness}}; }
void from_json(const json& j, CriticalExponent& c) {
    c.value = j.at("value").get<Rational>();
    c.witness = j.at("witness").get<Repetition>();
}

void to_json(json& j, const BalanceViolation& v) {
    j = json{{"letter", v.letter}, {"length", v.length}, {"i", v.i},
             {"j", v.j},           {"countI", v.count_i}, {"countJ", v.count_j}};
}

void from_json(const json& j, BalanceViolation& v) {
    v.letter = j.at("letter").get<Letter>();
    v.length = j.at("length").get<std::size_t>();
    v.i = j.at("i").get<std::size_t>();
    v.j = j.at("j").get<std::size_t>();
    v.count_i = j.at("countI").get<std::size_t>();
    v.count_j = j.at("countJ").get<std::size_t>();
}

void to_json(json& j, const BalanceReport& r) {
    j = json{{"balanced", r.balanced}, {"checkedUpTo", r.checked_up_to}, {"violation", nullptr}};
    if (r.violation) j["violation"] = *r.violation;
}

void from_json(const json& j, BalanceReport& r) {
    r.balanced = j.at("balanced").get<bool>();
    r.checked_up_to = j.at("checkedUpTo").get<std::size_t>();
    r.violation.reset();
    if (j.contains("violation") && !j["violation"].is_null()) r.violation = j["violation"].get<BalanceViolation>();
}

void to_json(json& j, const StandardPair& p) { j = json{{"u", p.u}, {"v", p.v}, {"depth", p.depth}}; }
void from_json(const json& j, StandardPair& p) {
    p.u = j.at("u").get<FiniteWord>();
    p.v = j.at("v").get<FiniteWord>();
    p.depth = j.at("depth").get<std::size_t>();
}

void to_json(json& j, const SubstitutionWitness& w) {
    j = json{{"split", w.split}, {"w", w.w}, {"wPrime", w.w_prime}, {"witness", w.witness}};
}

void from_json(const json& j, SubstitutionWitness& w) {
    w.split = j.at("split").get<unsigned>();
    w.w = j.at("w").get<FiniteWord>();
    w.w_prime = j.at("wPrime").get<FiniteWord>();
    w.witness = j.at("witness").get<Repetition>();
}

void to_json(json& j, const PruneRecord& r) {
    j = json{{"node", r.node_id}, {"pair", r.pair}, {"witnesses", r.witnesses}};
}

void from_json(const json& j, PruneRecord& r) {
    r.node_id = j.at("node").get<std::size_t>();
    r.pair = j.at("pair").get<StandardPair>();
    r.witnesses = j.at("witnesses").get<std::vector<SubstitutionWitness>>();
}

namespace {

const char* status_name(SearchStatus s) { return s == SearchStatus::proved ? "proved" : "resource_exhausted"; }

}  // namespace

void to_json(json& j, const SearchOutcome& o) {
    j = json{{"status", status_name(o.status)},
             {"nodesExpanded", o.nodes_expanded},
             {"nodesPruned", o.nodes_pruned},
             {"frontierSize", o.frontier_size},
             {"maxDepthSeen", o.max_depth_seen},
             {"longerWordLengths", o.longer_word_lengths},
             {"log", o.log}};
}

void from_json(const json& j, SearchOutcome& o) {
    const auto status = j.at("status").get<std::string>();
    if (status == "proved") {
        o.status = SearchStatus::proved;
    } else if (status == "resource_exhausted") {
        o.status = SearchStatus::resource_exhausted;
    } else {
        throw ParseError("unknown search status '" + status + "'");
    }
    o.nodes_expanded = j.at("nodesExpanded").get<std::size_t>();
    o.nodes_pruned = j.at("nodesPruned").get<std::size_t>();
    o.frontier_size = j.at("frontierSize").get<std::size_t>();
    o.max_depth_seen = j.at("maxDepthSeen").get<std::size_t>();
    o.longer_word_lengths = j.value("longerWordLengths", std::vector<std::size_t>{});
    o.log = j.value("log", std::vector<PruneRecord>{});
}

void to_json(json& j, const UltimatelyPeriodic& u) { j = json{{"preperiod", u.preperiod}, {"period", u.period}}; }
void from_json(const json& j, UltimatelyPeriodic& u) {
    u.preperiod = j.at("preperiod").get<std::vector<std::uint64_t>>();
    u.period = j.at("period").get<std::vector<std::uint64_t>>();
    if (u.period.empty()) throw ParseError("empty period");
}

void to_json(json& j, const WeightPeriods& w) {
    j = json{{"modulus", w.modulus}, {"zeros", w.zeros}, {"ones", w.ones}};
}

void from_json(const json& j, WeightPeriods& w) {
    w.modulus = j.at("modulus").get<std::uint64_t>();
    w.zeros = j.at("zeros").get<UltimatelyPeriodic>();
    w.ones = j.at("ones").get<UltimatelyPeriodic>();
}

void to_json(json& j, const Dfao& d) {
    std::vector<unsigned> output(d.output.begin(), d.output.end());
    j = json{{"states", d.num_states()},
             {"initial", d.initial},
             {"order", d.order == ReadingOrder::lsd_first ? "lsd" : "msd"},
             {"digitBound", d.digit_bound},
             {"output", output},
             {"delta", d.delta}};
}

void from_json(const json& j, Dfao& d) {
    d.initial = j.at("initial").get<std::size_t>();
    const auto order = j.at("order").get<std::string>();
    if (order != "lsd" && order != "msd") throw ParseError("unknown order '" + order + "'");
    d.order = order == "lsd" ? ReadingOrder::lsd_first : ReadingOrder::msd_first;
    d.digit_bound = j.at("digitBound").get<unsigned>();
    const auto output = j.at("output").get<std::vector<unsigned>>();
    d.output.assign(output.begin(), output.end());
    d.delta = j.at("delta").get<std::vector<std::size_t>>();
    const std::size_t n = d.output.size();
    if (n == 0 || d.initial >= n || d.delta.size() != n * (d.digit_bound + 1)) throw ParseError("inconsistent automaton");
    for (std::size_t t : d.delta) {
        if (t >= n) throw ParseError("transition target out of range");
    }
}

void to_json(json& j, const EquivalenceResult& r) {
    j = json{{"ok", r.ok}, {"firstMismatch", nullptr}};
    if (r.first_mismatch) j["firstMismatch"] = *r.first_mismatch;
}

void from_json(const json& j, EquivalenceResult& r) {
    r.ok = j.at("ok").get<bool>();
    r.first_mismatch.reset();
    if (j.contains("firstMismatch") && !j["firstMismatch"].is_null()) r.first_mismatch = j["firstMismatch"].get<std::uint64_t>();
}

void to_json(json& j, const PeriodLawRecord& r) {
    j = json{{"period", r.period},
             {"n", r.n},
             {"start", r.start},
             {"qualifyingRuns", r.qualifying_runs},
             {"uniformLength", r.uniform_length},
             {"matchesLaw", r.matches_law},
             {"lawIndex", r.law_index},
             {"exponent", r.exponent()}};
}

void from_json(const json& j, PeriodLawRecord& r) {
    r.period = j.at("period").get<std::size_t>();
    r.n = j.at("n").get<std::size_t>();
    r.start = j.at("start").get<std::size_t>();
    r.qualifying_runs = j.at("qualifyingRuns").get<std::size_t>();
    r.uniform_length = j.at("uniformLength").get<bool>();
    r.matches_law = j.at("matchesLaw").get<bool>();
    r.law_index = j.at("lawIndex").get<long>();
}

}  // namespace balword
