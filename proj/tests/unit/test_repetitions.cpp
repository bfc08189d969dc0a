#include "balword/errors.hpp"
#include "balword/repetitions.hpp"
#include "balword/wordgen.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <set>
#include <unordered_set>

using namespace balword;

namespace {

FiniteWord w(const char* s) { return FiniteWord::from_string(s); }
const ContinuedFraction kFib = ContinuedFraction::parse("[0;2,(1)]");

// Some factors of x_k with a mutation or two, so that long runs occur and then break.
FiniteWord test_word(std::mt19937_64& rng, int trial) {
    if (trial % 3 == 0) return oracle::random_word(rng, 200, 2 + unsigned(trial % 3));
    const unsigned k = 3 + unsigned(trial % 8);
    const FiniteWord x = table1_word(k, 1000);
    std::uniform_int_distribution<std::size_t> start(0, 700), len(1, 200);
    FiniteWord f = x.slice(start(rng), len(rng));
    if (trial % 3 == 2) {
        std::vector<Letter> letters = f.letters();
        letters[rng() % letters.size()] = Letter(rng() % k);
        f = FiniteWord(letters, k);
    }
    return f;
}

// Distinct factors of c_theta of each length 1..max_len, read off a long enough prefix.
std::vector<std::vector<FiniteWord>> fibonacci_factors(std::size_t max_len) {
    const FiniteWord prefix = sturmian_prefix(kFib, 6 * max_len);
    std::vector<std::vector<FiniteWord>> out(max_len + 1);
    for (std::size_t n = 1; n <= max_len; ++n) {
        std::unordered_set<std::string> seen;
        for (std::size_t i = 0; i + n <= prefix.size(); ++i) {
            const FiniteWord f = prefix.slice(i, n);
            if (seen.insert(f.to_string()).second) out[n].push_back(f);
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("repetitions") {

TEST_CASE("periods, exponent, roots") {
    CHECK(periods(w("01010")) == std::vector<std::size_t>{2, 4, 5});
    CHECK(periods(w("0000")) == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(periods(w("012")) == std::vector<std::size_t>{3});
    CHECK(exponent(w("01010")) == Rational(5, 2));
    CHECK(exponent(w("0")) == 1);
    CHECK(exponent(w("010010")) == 2);
    CHECK_FALSE(is_primitive(w("0101")));
    CHECK(is_primitive(w("0100")));
    CHECK(fractional_root(w("0101")).to_string() == "01");
    CHECK(fractional_root(w("01001")).to_string() == "010");
    CHECK(border_table(w("01010").view()) == std::vector<std::size_t>{0, 0, 0, 1, 2, 3});
}

TEST_CASE("integral index") {
    CHECK(integral_index(w("0"), sturmian_prefix(kFib, 100)) == 2);
    CHECK(integral_index(w("01"), w("2013")) == 1);
    CHECK(integral_index(w("01"), w("222")) == 0);
    CHECK(integral_index(w("010"), sturmian_prefix(kFib, 1000)) == 3);
    CHECK(integral_index(w("01"), w("0101201010101")) == 4);
}

TEST_CASE("maximal repetitions: small cases") {
    CHECK(maximal_repetitions(w("01010"), 2, 2) == std::vector<Repetition>{{0, 2, 5, true}});
    const auto runs = maximal_repetitions(w("0010010"), 3, Rational(3, 2));
    CHECK(runs == std::vector<Repetition>{{0, 1, 2, false}, {3, 1, 2, false}, {1, 2, 3, false}, {4, 2, 3, true}, {0, 3, 7, true}});
    CHECK(maximal_repetitions(w("0"), 1, 1) == std::vector<Repetition>{{0, 1, 1, true}});
    CHECK_THROWS_AS(maximal_repetitions(w("01"), 0, 1), InvalidArgument);
}

TEST_CASE("maximal repetitions in x_3 and x_4") {
    const auto x3 = table1_word(3, 10000);
    const auto runs3 = maximal_repetitions(x3, 10, 2);
    auto it = std::find_if(runs3.begin(), runs3.end(), [](const Repetition& r) { return r.period == 7 && r.length == 17; });
    REQUIRE(it != runs3.end());
    CHECK(it->exponent() == Rational(17, 7));
    std::vector<Letter> base;
    for (std::size_t i = 0; i < 7; ++i) base.push_back(x3[it->start + i] >= 2 ? 1 : 0);
    const FiniteWord root(base, 2);
    CHECK(is_conjugate(root, w("0101001")));
    const auto cls = classify_conjugate(root, ContinuedFraction::parse("[0;(2)]"), 10);
    CHECK(cls.to_string() == "SemiStandard(3,1)");

    const auto runs4 = maximal_repetitions(table1_word(4, 10000), 20, Rational(3, 2));
    CHECK(std::any_of(runs4.begin(), runs4.end(), [](const Repetition& r) { return r.period == 16 && r.length == 27; }));
}

TEST_CASE("agreement with brute force on 500 words") {
    std::mt19937_64 rng(99);
    const std::vector<Rational> thresholds{Rational(1), Rational(3, 2), Rational(2), Rational(7, 3)};
    for (int trial = 0; trial < 500; ++trial) {
        const FiniteWord x = test_word(rng, trial);
        REQUIRE(periods(x) == oracle::periods(x));
        const auto ps = oracle::periods(x);
        REQUIRE(exponent(x) == Rational(x.size(), ps.front()));
        const std::size_t p_max = 1 + rng() % x.size();
        const Rational& e_min = thresholds[trial % thresholds.size()];
        const auto expect = oracle::maximal_runs(x, p_max, e_min);
        REQUIRE(maximal_repetitions(x, p_max, e_min) == expect);
        REQUIRE(maximal_repetitions(x, p_max, e_min, ScanOptions{3}) == expect);

        const auto all = oracle::maximal_runs(x, p_max, 0);
        Rational best_incl = 0, best_excl = 0;
        for (const auto& r : all) {
            best_incl = std::max(best_incl, r.exponent());
            if (!r.right_open) best_excl = std::max(best_excl, r.exponent());
        }
        const auto ce = critical_exponent_estimate(x, p_max);
        CHECK(ce.value == best_incl);
        CHECK(ce.witness.exponent() == ce.value);
        CHECK(critical_exponent_estimate(x, p_max, BoundaryPolicy::include_right_open, ScanOptions{4}) == ce);
        if (best_excl > 0) {
            CHECK(critical_exponent_estimate(x, p_max, BoundaryPolicy::exclude_right_open).value == best_excl);
        } else {
            CHECK_THROWS_AS(critical_exponent_estimate(x, p_max, BoundaryPolicy::exclude_right_open), NotFound);
        }

        // Fine and Wilf
        for (std::size_t a : ps) {
            for (std::size_t b : ps) {
                const std::size_t g = std::gcd(a, b);
                if (a + b <= x.size() + g) CHECK(std::find(ps.begin(), ps.end(), g) != ps.end());
            }
        }

        // first factor reaching a bound, by (period, start)
        const Rational bound = thresholds[(trial + 1) % thresholds.size()] + Rational(1, 2);
        const auto hit = find_repetition_at_least(x.view(), bound);
        const auto runs = oracle::maximal_runs(x, x.size(), bound);
        if (runs.empty()) {
            CHECK_FALSE(hit);
        } else {
            REQUIRE(hit);
            CHECK(*hit == runs.front());
        }
    }
}

TEST_CASE("critical exponent estimates") {
    const auto ce = critical_exponent_estimate(w("000"), 3);
    CHECK(ce.value == 3);
    CHECK(ce.witness == Repetition{0, 1, 3, true});
    // ties go to the earliest (period, start)
    CHECK(critical_exponent_estimate(w("00100"), 5).witness == Repetition{0, 1, 2, false});

    const auto fib = sturmian_prefix(kFib, 100000);
    const QuadraticNumber two_plus_phi(Rational(5, 2), Rational(1, 2), 5);
    for (auto policy : {BoundaryPolicy::include_right_open, BoundaryPolicy::exclude_right_open}) {
        const auto e = critical_exponent_estimate(fib, 1000, policy);
        CHECK(QuadraticNumber(e.value) < two_plus_phi);
        CHECK(QuadraticNumber(e.value) > two_plus_phi - QuadraticNumber(Rational(1, 100)));
    }
    const auto x3 = critical_exponent_estimate(table1_word(3, 100000), 1000, BoundaryPolicy::exclude_right_open);
    CHECK(QuadraticNumber(x3.value) < QuadraticNumber(Rational(2), Rational(1, 2), 2));
    CHECK(x3.value > Rational(27, 10));
}

TEST_CASE("conjugacy and classification") {
    CHECK(is_conjugate(w("001"), w("010")));
    CHECK_FALSE(is_conjugate(w("001"), w("011")));
    CHECK_FALSE(is_conjugate(w("01"), w("010")));
    CHECK(classify_conjugate(w("10010"), kFib, 10).to_string() == "Standard(3)");
    CHECK(classify_conjugate(w("1"), kFib, 10).to_string() == "Standard(-1)");
    CHECK(classify_conjugate(w("0"), kFib, 10).to_string() == "Standard(0)");
    for (const char* text : {"[0;2,(1)]", "[0;(2)]", "[0;1,4,2,(3)]"}) {
        CHECK(classify_conjugate(w("0110"), ContinuedFraction::parse(text), 20).kind == ConjugateClass::Kind::none);
    }
    CHECK(classify_conjugate(w("100"), ContinuedFraction::parse("[0;(3)]"), 5).to_string() == "Standard(1)");
    CHECK(classify_conjugate(w("0010"), ContinuedFraction::parse("[0;(3)]"), 5).to_string() == "SemiStandard(2,1)");
}

TEST_CASE("period decomposition") {
    const auto d = period_decomposition(w("01010"));
    CHECK(d.periods == std::vector<std::size_t>{2, 4, 5});
    REQUIRE(d.differences.size() == 2);
    CHECK(d.differences[0].to_string() == "01");
    CHECK(d.differences[1].to_string() == "0");
    CHECK(d.lengths_non_increasing);
    CHECK(period_decomposition(w("0112")).differences.empty());
}

TEST_CASE("difference lengths never increase, even off Sturmian words") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const FiniteWord x = trial % 2 ? oracle::random_word(rng, 40, 2) : test_word(rng, trial);
        CHECK(period_decomposition(x).lengths_non_increasing);
    }
}

TEST_CASE("Fibonacci factors up to length 400: roots and non-minimal periods") {
    const auto factors = fibonacci_factors(400);
    const QuadraticNumber bound(Rational(5, 4), Rational(1, 4), 5);
    for (std::size_t n = 1; n <= 400; ++n) {
        REQUIRE(factors[n].size() == n + 1);  // Sturmian factor complexity: the list is complete
        for (const auto& f : factors[n]) {
            const auto ps = periods(f);
            const auto root_class = classify_conjugate(f.prefix(ps.front()), kFib, 40);
            REQUIRE(root_class.kind == ConjugateClass::Kind::standard);
            for (std::size_t i = 1; i < ps.size(); ++i) {
                if (!is_primitive(f.prefix(ps[i]))) continue;
                REQUIRE(QuadraticNumber(Rational(n, ps[i])) < bound);
            }
        }
    }
}

TEST_CASE("Fibonacci factors up to length 60: difference words are Fibonacci conjugates") {
    const auto factors = fibonacci_factors(60);
    std::size_t decomposed = 0;
    for (std::size_t n = 1; n <= 60; ++n) {
        for (const auto& f : factors[n]) {
            const auto d = period_decomposition(f, &kFib, 40);
            CHECK(d.lengths_non_increasing);
            for (const auto& c : d.classes) REQUIRE(c.kind == ConjugateClass::Kind::standard);
            decomposed += d.classes.size();
        }
    }
    CHECK(decomposed > 1000);
}

TEST_CASE("x_3 squares have roots with an even number of letters from {0,1}") {
    const auto x3 = table1_word(3, 100000);
    const auto runs = maximal_repetitions(x3, 1000, 2);
    CHECK(runs.size() > 10);
    for (const auto& r : runs) {
        std::size_t low = 0;
        for (std::size_t i = 0; i < r.period; ++i) low += x3[r.start + i] < 2;
        REQUIRE(low % 2 == 0);
    }
}

}
