#include "balword/dfao.hpp"

#include "balword/errors.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace balword {

std::uint64_t UltimatelyPeriodic::at(std::size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
}

namespace {

// Convergent residues mod `modulus` for indices 0 .. mu + lambda - 1, where the
// recurrence state (next partial quotient phase, q_{i-1}, q_i, p_{i-1}, p_i)
// first repeats at index mu + lambda.
struct IndexCycle {
    std::size_t mu = 0;
    std::size_t lambda = 0;
    std::vector<std::uint64_t> q;
    std::vector<std::uint64_t> p;

    std::size_t next_phase(std::size_t j) const { return j + 1 == mu + lambda ? mu : j + 1; }
};

IndexCycle index_cycle(const ContinuedFraction& cf, std::uint64_t modulus) {
    if (!cf.is_quadratic()) throw NotQuadratic("ultimately periodic weights need a quadratic slope");
    if (modulus == 0) throw InvalidArgument("modulus must be positive");
    using State = std::array<std::uint64_t, 5>;
    std::map<State, std::size_t> seen;
    IndexCycle out;
    std::uint64_t q_prev = 0, q = 1 % modulus, p_prev = 1 % modulus, p = 0;
    for (std::size_t i = 0;; ++i) {
        const State state{cf.phase(i + 1), q_prev, q, p_prev, p};
        if (auto it = seen.find(state); it != seen.end()) {
            out.mu = it->second;
            out.lambda = i - it->second;
            return out;
        }
        seen.emplace(state, i);
        out.q.push_back(q);
        out.p.push_back(p);
        const std::uint64_t d = cf.partial_quotient(i + 1) % modulus;
        const std::uint64_t q_next = (d * q + q_prev) % modulus;
        const std::uint64_t p_next = (d * p + p_prev) % modulus;
        q_prev = q;
        q = q_next;
        p_prev = p;
        p = p_next;
    }
}

UltimatelyPeriodic minimal_form(const std::vector<std::uint64_t>& values, std::size_t mu, std::size_t lambda) {
    auto value = [&](std::size_t i) { return i < mu + lambda ? values[i] : values[mu + (i - mu) % lambda]; };
    std::size_t period = lambda;
    for (std::size_t cand = 1; cand <= lambda; ++cand) {
        if (lambda % cand != 0) continue;
        bool ok = true;
        for (std::size_t i = mu; i < mu + lambda && ok; ++i) ok = value(i) == value(i + cand);
        if (ok) {
            period = cand;
            break;
        }
    }
    std::size_t pre = mu;
    while (pre > 0 && value(pre - 1) == value(pre - 1 + period)) --pre;
    UltimatelyPeriodic out;
    for (std::size_t i = 0; i < pre; ++i) out.preperiod.push_back(value(i));
    for (std::size_t i = pre; i < pre + period; ++i) out.period.push_back(value(i));
    return out;
}

}  // namespace

WeightPeriods weight_periods(const ContinuedFraction& cf, std::uint64_t m) {
    const IndexCycle cycle = index_cycle(cf, m);
    std::vector<std::uint64_t> zeros(cycle.q.size());
    for (std::size_t i = 0; i < zeros.size(); ++i) zeros[i] = (cycle.q[i] + m - cycle.p[i]) % m;
    return {m, minimal_form(zeros, cycle.mu, cycle.lambda), minimal_form(cycle.p, cycle.mu, cycle.lambda)};
}

namespace {

// Trailing-zero parity of the MSD string, read from the LSD end.
enum Parity : std::uint8_t { even_zeros = 0, odd_zeros = 1, letter0 = 2, letter1 = 3 };

Parity step_parity(Parity s, unsigned digit) {
    if (s == letter0 || s == letter1) return s;
    if (digit == 0) return s == even_zeros ? odd_zeros : even_zeros;
    return s == even_zeros ? letter0 : letter1;
}

void check_disjoint(const ConstantGapWord& y, const ConstantGapWord& y_prime) {
    for (Letter a : y.alphabet()) {
        for (Letter b : y_prime.alphabet()) {
            if (a == b) throw AlphabetOverlap("letter " + std::to_string(a) + " appears in both y and y'");
        }
    }
}

}  // namespace

std::size_t synthesis_state_bound(const ContinuedFraction& cf, const ConstantGapWord& y,
                                  const ConstantGapWord& y_prime) {
    const std::uint64_t modulus = std::lcm<std::uint64_t>(y.period(), y_prime.period());
    const IndexCycle cycle = index_cycle(cf, modulus);
    return 4 * y.period() * y_prime.period() * (cycle.mu + cycle.lambda);
}

Dfao synthesize(const ContinuedFraction& cf, const ConstantGapWord& y, const ConstantGapWord& y_prime,
                SynthesisOptions options) {
    if (!cf.is_quadratic()) throw NotQuadratic("synthesis needs an ultimately periodic expansion");
    check_disjoint(y, y_prime);
    const std::uint64_t zmod = y.period();
    const std::uint64_t omod = y_prime.period();
    const IndexCycle cycle = index_cycle(cf, std::lcm(zmod, omod));

    Dfao dfao;
    dfao.digit_bound = cf.max_partial_quotient();
    dfao.order = ReadingOrder::lsd_first;
    const unsigned radix = dfao.digit_bound + 1;

    // (parity, zeros mod |y|, ones mod |y'|, index phase)
    using Key = std::array<std::uint64_t, 4>;
    std::map<Key, std::size_t> ids;
    std::vector<Key> keys;
    auto intern = [&](const Key& key) {
        auto [it, fresh] = ids.emplace(key, keys.size());
        if (fresh) keys.push_back(key);
        return it->second;
    };
    dfao.initial = intern({even_zeros, 0, 0, 0});
    for (std::size_t s = 0; s < keys.size(); ++s) {
        const Key key = keys[s];
        const std::size_t j = std::size_t(key[3]);
        const std::uint64_t wz = (cycle.q[j] + zmod * omod - cycle.p[j]) % zmod;
        const std::uint64_t wo = cycle.p[j] % omod;
        for (unsigned d = 0; d < radix; ++d) {
            const Key next{step_parity(Parity(key[0]), d), (key[1] + d * wz) % zmod, (key[2] + d * wo) % omod,
                           cycle.next_phase(j)};
            const std::size_t id = intern(next);
            dfao.delta.resize(keys.size() * radix);
            dfao.delta[s * radix + d] = id;
        }
    }
    dfao.delta.resize(keys.size() * radix);
    dfao.output.resize(keys.size());
    for (std::size_t s = 0; s < keys.size(); ++s) {
        const Key& key = keys[s];
        // x[n] is the (count)-th letter of y^omega or y'^omega; count includes position n.
        if (key[0] == letter1) {
            dfao.output[s] = y_prime.at(std::size_t((key[2] + omod - 1) % omod));
        } else {
            dfao.output[s] = y.at(std::size_t((key[1] + zmod - 1) % zmod));
        }
    }
    return options.minimize ? minimize(dfao) : dfao;
}

Dfao minimize(const Dfao& dfao) {
    const std::size_t n = dfao.num_states();
    const unsigned radix = dfao.digit_bound + 1;

    // Only reachable states matter.
    std::vector<bool> reachable(n, false);
    std::deque<std::size_t> work{dfao.initial};
    reachable[dfao.initial] = true;
    while (!work.empty()) {
        const std::size_t s = work.front();
        work.pop_front();
        for (unsigned d = 0; d < radix; ++d) {
            const std::size_t t = dfao.next(s, d);
            if (!reachable[t]) {
                reachable[t] = true;
                work.push_back(t);
            }
        }
    }

    std::vector<std::size_t> cls(n, 0);
    {
        std::map<Letter, std::size_t> by_output;
        for (std::size_t s = 0; s < n; ++s) {
            if (!reachable[s]) continue;
            cls[s] = by_output.emplace(dfao.output[s], by_output.size()).first->second;
        }
    }
    std::size_t classes = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> signatures;
        std::vector<std::size_t> refined(n, 0);
        for (std::size_t s = 0; s < n; ++s) {
            if (!reachable[s]) continue;
            std::vector<std::size_t> sig{cls[s]};
            for (unsigned d = 0; d < radix; ++d) sig.push_back(cls[dfao.next(s, d)]);
            refined[s] = signatures.emplace(std::move(sig), signatures.size()).first->second;
        }
        const bool stable = signatures.size() == classes;
        classes = signatures.size();
        cls = std::move(refined);
        if (stable) break;
    }

    // Canonical numbering: BFS over classes from the initial class, digits ascending.
    std::vector<std::size_t> representative(classes, n);
    for (std::size_t s = 0; s < n; ++s) {
        if (reachable[s] && representative[cls[s]] == n) representative[cls[s]] = s;
    }
    std::vector<std::size_t> order(classes, n);
    std::vector<std::size_t> visit{cls[dfao.initial]};
    order[cls[dfao.initial]] = 0;
    for (std::size_t i = 0; i < visit.size(); ++i) {
        const std::size_t s = representative[visit[i]];
        for (unsigned d = 0; d < radix; ++d) {
            const std::size_t c = cls[dfao.next(s, d)];
            if (order[c] == n) {
                order[c] = visit.size();
                visit.push_back(c);
            }
        }
    }

    Dfao out;
    out.initial = 0;
    out.digit_bound = dfao.digit_bound;
    out.order = dfao.order;
    out.output.resize(visit.size());
    out.delta.resize(visit.size() * radix);
    for (std::size_t i = 0; i < visit.size(); ++i) {
        const std::size_t s = representative[visit[i]];
        out.output[i] = dfao.output[s];
        for (unsigned d = 0; d < radix; ++d) out.delta[i * radix + d] = order[cls[dfao.next(s, d)]];
    }
    return out;
}

Dfao reverse_reading_order(const Dfao& dfao, std::size_t max_states) {
    // A state is the map g: Q -> outputs, g(s) = output after feeding the digits
    // read so far (in the original order) from s. Reading digit b in the new order
    // prepends b in the old one: g'(s) = g(delta(s, b)).
    const unsigned radix = dfao.digit_bound + 1;
    std::map<std::vector<Letter>, std::size_t> ids;
    std::vector<std::vector<Letter>> funcs;
    auto intern = [&](std::vector<Letter> g) {
        auto [it, fresh] = ids.emplace(g, funcs.size());
        if (fresh) {
            if (funcs.size() == max_states) {
                throw StateLimit("reversal needs more than " + std::to_string(max_states) + " states");
            }
            funcs.push_back(std::move(g));
        }
        return it->second;
    };
    Dfao out;
    out.digit_bound = dfao.digit_bound;
    out.order = dfao.order == ReadingOrder::lsd_first ? ReadingOrder::msd_first : ReadingOrder::lsd_first;
    out.initial = intern(dfao.output);
    for (std::size_t i = 0; i < funcs.size(); ++i) {
        for (unsigned b = 0; b < radix; ++b) {
            std::vector<Letter> g(dfao.num_states());
            for (std::size_t s = 0; s < g.size(); ++s) g[s] = funcs[i][dfao.next(s, b)];
            const std::size_t id = intern(std::move(g));
            out.delta.resize(funcs.size() * radix);
            out.delta[i * radix + b] = id;
        }
    }
    out.delta.resize(funcs.size() * radix);
    out.output.resize(funcs.size());
    for (std::size_t i = 0; i < funcs.size(); ++i) out.output[i] = funcs[i][dfao.initial];
    return minimize(out);
}

Letter run_digits(const Dfao& dfao, std::span<const unsigned> digits) {
    std::size_t state = dfao.initial;
    for (unsigned d : digits) {
        if (d > dfao.digit_bound) {
            throw DigitOutOfRange("digit " + std::to_string(d) + " exceeds bound " + std::to_string(dfao.digit_bound));
        }
        state = dfao.next(state, d);
    }
    return dfao.output[state];
}

Letter run(const Dfao& dfao, const OstrowskiRep& rep) {
    if (dfao.order == ReadingOrder::lsd_first) return run_digits(dfao, rep.digits());
    const auto msd = rep.msd_digits();
    return run_digits(dfao, msd);
}

EquivalenceResult equivalence_check(const Dfao& dfao, const WordSpec& spec, std::uint64_t n) {
    if (n == 0) throw InvalidArgument("equivalence check needs N >= 1");
    const FiniteWord word = generate(spec, std::size_t(n));
    const OstrowskiSystem system(spec.cf);
    for (std::uint64_t i = 1; i <= n; ++i) {
        if (run(dfao, system.encode(i)) != word[std::size_t(i - 1)]) return {false, i};
    }
    return {true, std::nullopt};
}

std::string emit_text(const Dfao& dfao) {
    std::ostringstream out;
    out << "states " << dfao.num_states() << " initial " << dfao.initial << " order "
        << (dfao.order == ReadingOrder::lsd_first ? "lsd" : "msd") << " digits " << dfao.digit_bound << '\n';
    for (std::size_t s = 0; s < dfao.num_states(); ++s) out << "state " << s << " output " << int(dfao.output[s]) << '\n';
    for (std::size_t s = 0; s < dfao.num_states(); ++s) {
        for (unsigned d = 0; d <= dfao.digit_bound; ++d) out << "trans " << s << ' ' << d << ' ' << dfao.next(s, d) << '\n';
    }
    return out.str();
}

Dfao parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string word, order;
    std::size_t states = 0;
    Dfao dfao;
    if (!(in >> word) || word != "states" || !(in >> states)) throw ParseError("expected 'states K'");
    if (!(in >> word) || word != "initial" || !(in >> dfao.initial)) throw ParseError("expected 'initial S'");
    if (!(in >> word) || word != "order" || !(in >> order)) throw ParseError("expected 'order lsd|msd'");
    if (order == "lsd") {
        dfao.order = ReadingOrder::lsd_first;
    } else if (order == "msd") {
        dfao.order = ReadingOrder::msd_first;
    } else {
        throw ParseError("unknown order '" + order + "'");
    }
    if (!(in >> word) || word != "digits" || !(in >> dfao.digit_bound)) throw ParseError("expected 'digits D'");
    if (states == 0 || dfao.initial >= states) throw ParseError("bad state count or initial state");
    const unsigned radix = dfao.digit_bound + 1;
    dfao.output.assign(states, 0);
    dfao.delta.assign(states * radix, states);
    std::vector<bool> has_output(states, false);
    while (in >> word) {
        if (word == "state") {
            std::size_t q;
            int a;
            if (!(in >> q >> word >> a) || word != "output" || q >= states || a < 0 || a > 255) {
                throw ParseError("bad state line");
            }
            dfao.output[q] = Letter(a);
            has_output[q] = true;
        } else if (word == "trans") {
            std::size_t q, t;
            unsigned d;
            if (!(in >> q >> d >> t) || q >= states || t >= states || d > dfao.digit_bound) {
                throw ParseError("bad trans line");
            }
            dfao.delta[q * radix + d] = t;
        } else {
            throw ParseError("unknown line '" + word + "'");
        }
    }
    for (std::size_t q = 0; q < states; ++q) {
        if (!has_output[q]) throw ParseError("state " + std::to_string(q) + " has no output");
    }
    for (std::size_t t : dfao.delta) {
        if (t == states) throw ParseError("transition function is not total");
    }
    return dfao;
}

std::string emit_dot(const Dfao& dfao, std::string_view name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
    out << "  start [shape=point];\n  start -> q" << dfao.initial << ";\n";
    for (std::size_t s = 0; s < dfao.num_states(); ++s) {
        out << "  q" << s << " [label=\"" << s << '/' << int(dfao.output[s]) << "\"];\n";
    }
    for (std::size_t s = 0; s < dfao.num_states(); ++s) {
        // merge parallel edges into one comma-separated label
        std::map<std::size_t, std::string> labels;
        for (unsigned d = 0; d <= dfao.digit_bound; ++d) {
            auto& label = labels[dfao.next(s, d)];
            if (!label.empty()) label += ',';
            label += std::to_string(d);
        }
        for (const auto& [t, label] : labels) out << "  q" << s << " -> q" << t << " [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

bool walnut_qualifies(std::size_t length, std::size_t period, const Rational& e_min) {
    if (length < period) return false;
    const Rational slack = (e_min - 1) * Rational(period);
    // floor of a rational
    BigInt fl = numerator_of(slack) / denominator_of(slack);
    if (slack < 0 && fl * denominator_of(slack) != numerator_of(slack)) fl -= 1;
    return BigInt(length - period) >= fl + 1;
}

std::vector<PeriodLawRecord> walnut_emulation_report(const WordSpec& spec, std::size_t n, const Rational& e_min,
                                                     std::size_t p_max) {
    const FiniteWord word = generate(spec, n);
    const auto runs = maximal_repetitions(word, p_max, e_min);

    std::size_t table_size = 2;
    while (true) {
        const ConvergentTable probe(spec.cf, table_size);
        if (probe.q(long(table_size)) > 4 * BigInt(p_max) + 4) break;
        table_size *= 2;
    }
    const ConvergentTable table(spec.cf, table_size);
    auto q = [&](long j) { return table.q(j); };

    std::vector<PeriodLawRecord> out;
    std::size_t i = 0;
    while (i < runs.size()) {
        const std::size_t p = runs[i].period;
        std::size_t j = i;
        std::size_t longest = 0, longest_start = 0, qualifying = 0;
        std::vector<std::size_t> qualifying_lengths;
        for (; j < runs.size() && runs[j].period == p; ++j) {
            const auto& r = runs[j];
            if (r.right_open) continue;
            if (r.length > longest) {
                longest = r.length;
                longest_start = r.start;
            }
            if (walnut_qualifies(r.length, p, e_min)) {
                ++qualifying;
                qualifying_lengths.push_back(r.length);
            }
        }
        i = j;
        if (qualifying == 0) continue;

        PeriodLawRecord rec{p, longest - p, longest_start, qualifying, true, false, -1};
        for (std::size_t len : qualifying_lengths) rec.uniform_length = rec.uniform_length && len == longest;
        const BigInt bp = p, bn = rec.n;
        for (long jj = 0; jj + 1 <= long(table_size); ++jj) {
            bool match = false;
            switch (spec.law) {
                case RepetitionLaw::doubled_standard:
                    match = bp == 2 * q(jj) && bn == q(jj + 1) - 2;
                    break;
                case RepetitionLaw::semi_standard_square:
                    match = jj >= 1 && bp == q(jj - 1) + q(jj) && bn == bp + q(jj) - 2;
                    break;
                case RepetitionLaw::none:
                    break;
            }
            if (match) {
                rec.matches_law = true;
                rec.law_index = jj;
                break;
            }
        }
        out.push_back(rec);
    }
    return out;
}

}  // namespace balword
