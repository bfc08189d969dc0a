#pragma once

#include "balword/constant_gap.hpp"
#include "balword/numeric.hpp"
#include "balword/repetitions.hpp"
#include "balword/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace balword {

// Node of the tree rooted at (0,1) with children (u, uv) and (vu, v).
struct StandardPair {
    FiniteWord u;
    FiniteWord v;
    std::size_t depth = 0;

    static StandardPair root();
    // The longer word; v on ties.
    const FiniteWord& longer() const { return u.size() > v.size() ? u : v; }
    friend bool operator==(const StandardPair&, const StandardPair&) = default;
};

std::pair<StandardPair, StandardPair> children(const StandardPair& pair);

// x over {0,1}; w over A_i, w_prime over B_i. Same rule as hubert_expand.
FiniteWord substitute(const FiniteWord& x, const ConstantGapWord& w, const ConstantGapWord& w_prime);

struct Substitution {
    unsigned split;  // i: A_i = {0..i-1}, B_i = {i..k-1}
    ConstantGapWord w;
    ConstantGapWord w_prime;
};

// All (i, w, w') with 1 <= i <= k/2, w in L_{A_i}, w' in L_{B_i}.
// gap_bound applies to both alphabets; by default each uses 2^{|alphabet|-1}.
std::vector<Substitution> substitution_family(unsigned k, std::optional<std::size_t> gap_bound = std::nullopt);

struct SearchConfig {
    unsigned k = 3;
    Rational bound{5, 2};
    std::size_t max_nodes = 100000;
    std::size_t max_depth = 64;
    std::optional<std::size_t> gap_bound;
    unsigned threads = 1;
    bool record_log = true;
};

struct SubstitutionWitness {
    unsigned split;
    FiniteWord w;
    FiniteWord w_prime;
    Repetition witness;  // inside substitute(x, w, w'), exponent >= bound
    friend bool operator==(const SubstitutionWitness&, const SubstitutionWitness&) = default;
};

// A node is pruned only when every substitution reaches the bound.
struct PruneRecord {
    std::size_t node_id;
    StandardPair pair;
    std::vector<SubstitutionWitness> witnesses;
    friend bool operator==(const PruneRecord&, const PruneRecord&) = default;
};

enum class SearchStatus { proved, resource_exhausted };

struct SearchOutcome {
    SearchStatus status = SearchStatus::resource_exhausted;
    std::size_t nodes_expanded = 0;
    std::size_t nodes_pruned = 0;
    std::size_t frontier_size = 0;
    std::size_t max_depth_seen = 0;
    std::vector<PruneRecord> log;
    std::vector<std::size_t> longer_word_lengths;  // per expanded node, in BFS order
    friend bool operator==(const SearchOutcome&, const SearchOutcome&) = default;
};

// Breadth-first over standard pairs. `proved` means the queue emptied: no balanced
// word over k letters has critical exponent below the bound.
SearchOutcome prove_lower_bound(const SearchConfig& config);

// Re-checks one prune record without the repetitions module: every substitution in
// the family has a witness, and each witness factor has the claimed period, length
// and exponent >= bound. Returns an empty string when valid, else the reason.
std::string verify_prune_record(const PruneRecord& record, const SearchConfig& config,
                                const std::vector<Substitution>& family);

}  // namespace balword
