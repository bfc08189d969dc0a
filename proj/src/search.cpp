#include "balword/search.hpp"

#include "balword/errors.hpp"
#include "balword/wordgen.hpp"

#include <algorithm>
#include <deque>
#include <thread>

namespace balword {

StandardPair StandardPair::root() {
    return {FiniteWord::from_string("0", 2), FiniteWord::from_string("1", 2), 0};
}

std::pair<StandardPair, StandardPair> children(const StandardPair& pair) {
    return {StandardPair{pair.u, pair.u + pair.v, pair.depth + 1},
            StandardPair{pair.v + pair.u, pair.v, pair.depth + 1}};
}

FiniteWord substitute(const FiniteWord& x, const ConstantGapWord& w, const ConstantGapWord& w_prime) {
    return hubert_expand(x, w, w_prime);
}

std::vector<Substitution> substitution_family(unsigned k, std::optional<std::size_t> gap_bound) {
    if (k < 2) throw InvalidArgument("alphabet size must be at least 2");
    std::vector<Substitution> family;
    for (unsigned i = 1; 2 * i <= k; ++i) {
        std::vector<Letter> a, b;
        for (unsigned c = 0; c < i; ++c) a.push_back(Letter(c));
        for (unsigned c = i; c < k; ++c) b.push_back(Letter(c));
        const auto left = enumerate_constant_gap(a, gap_bound);
        const auto right = enumerate_constant_gap(b, gap_bound);
        for (const auto& w : left) {
            for (const auto& wp : right) family.push_back({i, ConstantGapWord(w), ConstantGapWord(wp)});
        }
    }
    return family;
}

namespace {

std::optional<PruneRecord> evaluate(const StandardPair& pair, const std::vector<Substitution>& family,
                                    const Rational& bound) {
    const FiniteWord& x = pair.longer();
    PruneRecord record{0, pair, {}};
    record.witnesses.reserve(family.size());
    for (const auto& sub : family) {
        const FiniteWord word = substitute(x, sub.w, sub.w_prime);
        auto rep = find_repetition_at_least(word.view(), bound);
        if (!rep) return std::nullopt;  // this substitution survives, so the node does
        record.witnesses.push_back({sub.split, sub.w.root(), sub.w_prime.root(), *rep});
    }
    return record;
}

}  // namespace

SearchOutcome prove_lower_bound(const SearchConfig& config) {
    if (config.bound <= 1) throw InvalidArgument("bound must exceed 1");
    if (config.max_nodes == 0) throw InvalidArgument("max_nodes must be positive");
    const auto family = substitution_family(config.k, config.gap_bound);

    SearchOutcome outcome;
    outcome.status = SearchStatus::resource_exhausted;
    std::deque<StandardPair> queue{StandardPair::root()};
    std::size_t next_id = 0;

    while (!queue.empty()) {
        const std::size_t depth = queue.front().depth;
        if (depth > config.max_depth || outcome.nodes_expanded >= config.max_nodes) break;

        // One BFS level (or what fits in the node budget), evaluated independently.
        std::size_t batch = 0;
        while (batch < queue.size() && queue[batch].depth == depth) ++batch;
        batch = std::min(batch, config.max_nodes - outcome.nodes_expanded);
        std::vector<StandardPair> level(std::make_move_iterator(queue.begin()),
                                        std::make_move_iterator(queue.begin() + std::ptrdiff_t(batch)));
        queue.erase(queue.begin(), queue.begin() + std::ptrdiff_t(batch));

        std::vector<std::optional<PruneRecord>> verdicts(level.size());
        const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, unsigned(level.size())));
        if (threads == 1) {
            for (std::size_t i = 0; i < level.size(); ++i) verdicts[i] = evaluate(level[i], family, config.bound);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    for (std::size_t i = t; i < level.size(); i += threads) {
                        verdicts[i] = evaluate(level[i], family, config.bound);
                    }
                });
            }
        }

        for (std::size_t i = 0; i < level.size(); ++i) {
            const std::size_t id = next_id++;
            ++outcome.nodes_expanded;
            outcome.max_depth_seen = std::max(outcome.max_depth_seen, level[i].depth);
            outcome.longer_word_lengths.push_back(level[i].longer().size());
            if (verdicts[i]) {
                ++outcome.nodes_pruned;
                if (config.record_log) {
                    verdicts[i]->node_id = id;
                    outcome.log.push_back(std::move(*verdicts[i]));
                }
            } else {
                auto [left, right] = children(level[i]);
                queue.push_back(std::move(left));
                queue.push_back(std::move(right));
            }
        }
    }

    outcome.frontier_size = queue.size();
    outcome.status = queue.empty() ? SearchStatus::proved : SearchStatus::resource_exhausted;
    return outcome;
}

std::string verify_prune_record(const PruneRecord& record, const SearchConfig& config,
                                const std::vector<Substitution>& family) {
    const FiniteWord& x = record.pair.longer();
    if (record.witnesses.size() != family.size()) {
        return "record has " + std::to_string(record.witnesses.size()) + " witnesses for " +
               std::to_string(family.size()) + " substitutions";
    }
    const BigInt& num = numerator_of(config.bound);
    const BigInt& den = denominator_of(config.bound);
    for (std::size_t s = 0; s < family.size(); ++s) {
        const auto& sub = family[s];
        const auto& wit = record.witnesses[s];
        if (wit.split != sub.split || wit.w != sub.w.root() || wit.w_prime != sub.w_prime.root()) {
            return "witness " + std::to_string(s) + " names a different substitution";
        }
        std::vector<Letter> word;
        word.reserve(x.size());
        std::size_t zeros = 0, ones = 0;
        for (Letter c : x.view()) {
            if (c == 0) {
                word.push_back(wit.w[zeros++ % wit.w.size()]);
            } else {
                word.push_back(wit.w_prime[ones++ % wit.w_prime.size()]);
            }
        }
        const Repetition& r = wit.witness;
        if (r.period == 0 || r.length < r.period || r.start + r.length > word.size()) {
            return "witness " + std::to_string(s) + " lies outside the substituted word";
        }
        for (std::size_t j = r.start; j + r.period < r.start + r.length; ++j) {
            if (word[j] != word[j + r.period]) return "witness " + std::to_string(s) + " lacks its period";
        }
        if (BigInt(r.length) * den < num * r.period) {
            return "witness " + std::to_string(s) + " exponent is below the bound";
        }
    }
    return {};
}

}  // namespace balword
