#include "balword/balance.hpp"
#include "balword/errors.hpp"
#include "balword/search.hpp"
#include "balword/wordgen.hpp"

#include <doctest.h>

#include <deque>

using namespace balword;

namespace {

FiniteWord w(const char* s) { return FiniteWord::from_string(s, 2); }
ConstantGapWord gap(const char* root) { return ConstantGapWord(FiniteWord::from_string(root)); }

SearchConfig config(unsigned k, Rational bound, std::size_t max_nodes = 100000) {
    SearchConfig c;
    c.k = k;
    c.bound = bound;
    c.max_nodes = max_nodes;
    return c;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("children") {
    const auto [a, b] = children(StandardPair::root());
    CHECK(a == StandardPair{w("0"), w("01"), 1});
    CHECK(b == StandardPair{w("10"), w("1"), 1});
    const auto [c, d] = children(a);
    CHECK(c.u == w("0"));
    CHECK(c.v == w("001"));
    CHECK(d.u == w("010"));
    CHECK(d.v == w("01"));
    const auto [e, f] = children(b);
    CHECK(e.u == w("10"));
    CHECK(e.v == w("101"));
    CHECK(f.u == w("110"));
    CHECK(f.v == w("1"));
    CHECK(StandardPair{w("01"), w("10"), 0}.longer() == w("10"));
}

TEST_CASE("substitution") {
    CHECK(substitute(w("0101"), gap("01"), gap("2")).to_string() == "0212");
    CHECK(substitute(w("11"), gap("01"), gap("23")).to_string() == "23");
    CHECK_THROWS_AS(substitute(w("01"), gap("01"), gap("1")), AlphabetOverlap);
    const auto cf = ContinuedFraction::parse("[0;(2)]");
    const WordSpec spec = table1_spec(3);
    for (std::size_t n = 1; n <= 8; ++n) {
        const FiniteWord s = standard_word(cf, n);
        CHECK(substitute(s, spec.y, spec.y_prime) == table1_word(3, s.size()));
    }
}

TEST_CASE("substitution family") {
    // k = 3: A_1 = {0} gives "0"; B_1 = {1,2} gives "12", "21"
    const auto f3 = substitution_family(3);
    REQUIRE(f3.size() == 2);
    CHECK(f3[0].w.root().to_string() == "0");
    CHECK(f3[1].w_prime.root().to_string() == "21");
    // k = 4: i = 1 (1 x |L_{1,2,3}|) and i = 2 (2 x 2)
    const auto f4 = substitution_family(4);
    const auto l123 = enumerate_constant_gap({1, 2, 3});
    CHECK(f4.size() == l123.size() + 4);
    CHECK(f4.size() == 22);
    CHECK_THROWS_AS(substitution_family(1), InvalidArgument);
}

TEST_CASE("k = 3, bound 5/2 is proved and every record re-verifies") {
    const auto cfg = config(3, Rational(5, 2));
    const auto outcome = prove_lower_bound(cfg);
    REQUIRE(outcome.status == SearchStatus::proved);
    CHECK(outcome.frontier_size == 0);
    CHECK(outcome.nodes_pruned == outcome.log.size());
    CHECK(outcome.nodes_expanded == outcome.longer_word_lengths.size());
    const auto family = substitution_family(3);
    for (const auto& rec : outcome.log) CHECK(verify_prune_record(rec, cfg, family).empty());

    // the checker notices tampering
    PruneRecord bad = outcome.log.front();
    bad.witnesses.front().witness.length -= 1;
    CHECK_FALSE(verify_prune_record(bad, cfg, family).empty());
    PruneRecord shifted = outcome.log.back();
    shifted.witnesses.back().witness.start += 1;
    CHECK_FALSE(verify_prune_record(shifted, cfg, family).empty());
    PruneRecord short_record = outcome.log.front();
    short_record.witnesses.pop_back();
    CHECK_FALSE(verify_prune_record(short_record, cfg, family).empty());
    auto stricter = cfg;
    stricter.bound = Rational(100);
    CHECK_FALSE(verify_prune_record(outcome.log.front(), stricter, family).empty());
}

TEST_CASE("k = 4, bound 7/4 is proved") {
    const auto cfg = config(4, Rational(7, 4), 1000000);
    const auto outcome = prove_lower_bound(cfg);
    REQUIRE(outcome.status == SearchStatus::proved);
    const auto family = substitution_family(4);
    for (const auto& rec : outcome.log) REQUIRE(verify_prune_record(rec, cfg, family).empty());
}

TEST_CASE("a bound above the optimum cannot be proved") {
    const auto outcome = prove_lower_bound(config(3, Rational(3), 2000));
    CHECK(outcome.status == SearchStatus::resource_exhausted);
    CHECK(outcome.frontier_size > 0);
    auto shallow = config(3, Rational(3));
    shallow.max_depth = 6;
    CHECK(prove_lower_bound(shallow).status == SearchStatus::resource_exhausted);
}

TEST_CASE("pruning is monotone in the bound") {
    std::size_t previous = 0;
    for (const Rational& b : {Rational(2), Rational(9, 4), Rational(12, 5), Rational(5, 2)}) {
        const auto outcome = prove_lower_bound(config(3, b));
        REQUIRE(outcome.status == SearchStatus::proved);
        CHECK(outcome.nodes_expanded >= previous);
        previous = outcome.nodes_expanded;
    }
}

TEST_CASE("threads do not change the outcome") {
    auto cfg = config(4, Rational(7, 4));
    const auto serial = prove_lower_bound(cfg);
    cfg.threads = 3;
    CHECK(prove_lower_bound(cfg) == serial);
}

TEST_CASE("longer words of expanded pairs are balanced") {
    // replay the tree to the depth the k = 3 proof reached
    const auto outcome = prove_lower_bound(config(3, Rational(5, 2)));
    std::deque<StandardPair> queue{StandardPair::root()};
    std::size_t checked = 0;
    while (!queue.empty()) {
        const StandardPair p = queue.front();
        queue.pop_front();
        if (p.depth > outcome.max_depth_seen) continue;
        const auto& x = p.longer();
        REQUIRE(check_balance(x, x.size()).balanced);
        ++checked;
        if (p.depth < 10) {
            auto [a, b] = children(p);
            queue.push_back(a);
            queue.push_back(b);
        }
    }
    CHECK(checked > 1000);
    for (const auto& rec : outcome.log) CHECK(check_balance(rec.pair.longer(), rec.pair.longer().size()).balanced);
}

TEST_CASE("configuration errors") {
    CHECK_THROWS_AS(prove_lower_bound(config(3, Rational(1))), InvalidArgument);
    CHECK_THROWS_AS(prove_lower_bound(config(3, Rational(2), 0)), InvalidArgument);
}

}
