#include "balword/errors.hpp"
#include "balword/ostrowski.hpp"
#include "balword/wordgen.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <random>

using namespace balword;

namespace {

ContinuedFraction cf(const char* text) { return ContinuedFraction::parse(text); }
OstrowskiRep rep(std::vector<unsigned> lsd) { return OstrowskiRep(std::move(lsd)); }

}  // namespace

TEST_SUITE("ostrowski") {

TEST_CASE("encode") {
    const OstrowskiSystem fib(cf("[0;2,(1)]"));
    const OstrowskiSystem pell(cf("[0;(2)]"));
    CHECK(fib.encode(std::uint64_t(0)).empty());
    CHECK(fib.encode(std::uint64_t(4)).digits() == std::vector<unsigned>{1, 0, 1});
    CHECK(pell.encode(std::uint64_t(17)).digits() == std::vector<unsigned>{0, 0, 1, 1});
    CHECK(fib.format(fib.encode(std::uint64_t(5))) == "1000");
    CHECK(fib.encode(BigInt(4)) == fib.encode(std::uint64_t(4)));
}

TEST_CASE("decode and legality") {
    const OstrowskiSystem fib(cf("[0;2,(1)]"));
    CHECK(fib.decode(rep({})) == 0);
    CHECK(fib.decode(rep({1, 0, 1})) == 4);
    CHECK_THROWS_AS(fib.decode(rep({2})), IllegalRep);
    CHECK_FALSE(fib.is_valid(rep({1, 1})));
    CHECK(fib.is_valid(rep({0, 1})));
    CHECK(fib.is_valid(rep({1, 0, 1})));
    CHECK(fib.is_valid(rep({1, 0, 1, 0, 0})));
    CHECK(fib.decode(rep({1, 0, 1, 0, 0})) == 4);
    CHECK_THROWS_AS(fib.decode(rep({0, 2})), IllegalRep);
    const OstrowskiSystem pell(cf("[0;(2)]"));
    CHECK(pell.is_valid(rep({1, 2})) == false);
    CHECK(pell.is_valid(rep({0, 2})));
    CHECK(pell.is_valid(rep({1, 1, 2})) == false);
}

TEST_CASE("round trip on every table slope") {
    for (const auto& row : table1_rows()) {
        const OstrowskiSystem sys(cf(std::string(row.cf).c_str()));
        for (std::uint64_t n = 0; n <= 100000; ++n) {
            const auto r = sys.encode(n);
            REQUIRE(sys.is_valid(r));
            REQUIRE(sys.decode_u64(r) == n);
        }
    }
}

TEST_CASE("big integers take the same path") {
    const OstrowskiSystem sys(cf("[0;1,4,2,(3)]"));
    const BigInt big = BigInt(1) << 200;
    const auto r = sys.encode(big + 12345);
    CHECK(sys.is_valid(r));
    CHECK(sys.decode(r) == big + 12345);
    CHECK(sys.encode(BigInt(987654321)) == sys.encode(std::uint64_t(987654321)));
    const auto max = std::numeric_limits<std::uint64_t>::max();
    CHECK(sys.decode(sys.encode(max)) == BigInt(max));
}

TEST_CASE("representations are unique") {
    // Enumerate every legal digit string of bounded length and count hits per value.
    for (const char* text : {"[0;2,(1)]", "[0;(2)]", "[0;1,3,1,(2)]"}) {
        const auto c = cf(text);
        const OstrowskiSystem sys(c);
        const std::size_t width = 8;
        std::map<BigInt, int> hits;
        std::vector<unsigned> digits(width, 0);
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
            if (i == width) {
                const OstrowskiRep r(digits);
                if (sys.is_valid(r)) ++hits[sys.decode(r)];
                return;
            }
            const unsigned hi = i == 0 ? c.partial_quotient(1) - 1 : c.partial_quotient(i + 1);
            for (unsigned d = 0; d <= hi; ++d) {
                digits[i] = d;
                fill(i + 1);
            }
        };
        fill(0);
        const std::uint64_t limit = sys.small_weights()[width];
        CHECK(hits.size() == limit);
        for (const auto& [value, count] : hits) {
            CHECK(value < limit);
            CHECK(count == 1);
        }
    }
}

TEST_CASE("letter at position") {
    const OstrowskiSystem fib(cf("[0;2,(1)]"));
    CHECK(fib.letter_at(std::uint64_t(1)) == 0);
    CHECK(fib.letter_at(std::uint64_t(2)) == 1);
    CHECK(fib.letter_at(std::uint64_t(5)) == 1);
    CHECK(fib.letter_at(std::uint64_t(0), IndexBase::zero) == 0);
    CHECK(fib.letter_at(std::uint64_t(1), IndexBase::zero) == 1);
    CHECK(letter_from_digits(rep({0, 0, 0, 1})) == 1);
    CHECK(letter_from_digits(rep({0, 0, 1})) == 0);
    const std::string fibonacci = "010010100100101001010010010100";
    for (std::size_t n = 1; n <= fibonacci.size(); ++n) CHECK(int(fib.letter_at(std::uint64_t(n))) == fibonacci[n - 1] - '0');
    CHECK(letter_at(cf("[0;2,(1)]"), BigInt(5)) == 1);
    CHECK_THROWS_AS(fib.letter_at(std::uint64_t(0)), InvalidArgument);
}

TEST_CASE("prefix factorization") {
    using PF = PrefixFactor;
    CHECK(prefix_factorization(cf("[0;(2)]"), 5) == std::vector<PF>{{2, 1}});
    CHECK(prefix_factorization(cf("[0;2,(1)]"), 4) == std::vector<PF>{{2, 1}, {0, 1}});
    CHECK(prefix_factorization(cf("[0;2,(1)]"), 8) == std::vector<PF>{{4, 1}});
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> pick(1, 100000);
    for (const auto& row : table1_rows()) {
        const auto c = cf(std::string(row.cf).c_str());
        const FiniteWord prefix = sturmian_prefix(c, 100000);
        for (int trial = 0; trial < 125; ++trial) {
            const std::uint64_t n = pick(rng);
            FiniteWord built;
            for (const auto& f : prefix_factorization(c, n)) built += standard_word(c, f.index).power(f.multiplicity);
            REQUIRE(built == prefix.prefix(std::size_t(n)));
        }
    }
}

TEST_CASE("text format") {
    const OstrowskiSystem fib(cf("[0;2,(1)]"));
    CHECK(fib.format(rep({1, 0, 0, 1})) == "1001");
    CHECK(fib.parse("1001000") == rep({0, 0, 0, 1, 0, 0, 1}));
    CHECK(fib.format(rep({})) == "0");
    const OstrowskiSystem wide(cf("[0;(12)]"));
    CHECK(wide.format(rep({2, 0, 3})) == "3,0,2");
    CHECK(wide.parse("3,0,2") == rep({2, 0, 3}));
    CHECK_THROWS_AS(fib.parse("1x"), ParseError);
    CHECK_THROWS_AS(fib.parse("2"), IllegalRep);
}

}
