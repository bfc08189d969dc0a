#include "balword/errors.hpp"
#include "balword/wordgen.hpp"

#include <doctest.h>

using namespace balword;

namespace {

ContinuedFraction cf(const char* text) { return ContinuedFraction::parse(text); }
ConstantGapWord gap(const char* root) { return ConstantGapWord(FiniteWord::from_string(root)); }

const char* const kX3 = "021201202102120210212012021201202102120";
const char* const kX4 = "021031201301203102130120130210310213012";

}  // namespace

TEST_SUITE("wordgen") {

TEST_CASE("characteristic word prefixes") {
    CHECK(sturmian_prefix(cf("[0;(2)]"), 42).to_string() == "010100101001010100101001010100101001010010");
    CHECK(sturmian_prefix(cf("[0;2,(1)]"), 30).to_string() == "010010100100101001010010010100");
    CHECK(sturmian_prefix(cf("[0;(2)]"), 1).to_string() == "0");
    CHECK(sturmian_prefix(cf("[0;1,(2)]"), 1).to_string() == "1");
}

TEST_CASE("both generators agree on every table slope") {
    for (const auto& row : table1_rows()) {
        const auto c = cf(std::string(row.cf).c_str());
        CHECK(sturmian_prefix(c, 100000) == sturmian_prefix_by_numeration(c, 100000));
    }
}

TEST_CASE("letter frequencies follow the slope") {
    for (const auto& row : table1_rows()) {
        const auto c = cf(std::string(row.cf).c_str());
        const QuadraticNumber alpha = slope_value(c);
        const FiniteWord w = sturmian_prefix(c, 100000);
        std::size_t ones = 0;
        for (std::size_t n = 1; n <= w.size(); ++n) {
            ones += w[n - 1];
            if (n % 997 != 0 && n != w.size()) continue;
            const QuadraticNumber diff = QuadraticNumber(Rational(ones)) - alpha * QuadraticNumber(Rational(n));
            CHECK(diff < QuadraticNumber(Rational(1)));
            CHECK(diff > QuadraticNumber(Rational(-1)));
        }
    }
}

TEST_CASE("Hubert expansion") {
    CHECK(hubert_expand(FiniteWord::from_string("01"), gap("01"), gap("2")).to_string() == "02");
    CHECK(hubert_expand(sturmian_prefix(cf("[0;(2)]"), 39), gap("01"), gap("2")).to_string() == kX3);
    CHECK(hubert_expand(sturmian_prefix(cf("[0;2,(1)]"), 39), gap("01"), gap("23")).to_string() == kX4);
    CHECK_THROWS_AS(hubert_expand(FiniteWord::from_string("01"), gap("01"), gap("12")), AlphabetOverlap);
}

TEST_CASE("expansion is length preserving and erases back to the base") {
    for (const auto& row : table1_rows()) {
        const WordSpec spec = table1_spec(row.k);
        const FiniteWord base = sturmian_prefix(spec.cf, 5000);
        const FiniteWord x = hubert_expand(base, spec.y, spec.y_prime);
        REQUIRE(x.size() == base.size());
        const auto ya = spec.y.alphabet();
        for (std::size_t i = 0; i < x.size(); ++i) {
            const bool from_y = std::find(ya.begin(), ya.end(), x[i]) != ya.end();
            REQUIRE(Letter(from_y ? 0 : 1) == base[i]);
        }
    }
}

TEST_CASE("table words") {
    CHECK(table1_word(3, 39).to_string() == kX3);
    CHECK(table1_word(4, 39).to_string() == kX4);
    CHECK(table1_word(5, 10) == hubert_expand(sturmian_prefix(cf("[0;(2)]"), 10), gap("0102"), gap("34")));
    CHECK(table1_word(5, 10).to_string() == "0314023041");
    CHECK_THROWS_AS(table1_word(2, 10), UnsupportedK);
    CHECK_THROWS_AS(table1_word(11, 10), UnsupportedK);
    for (const auto& row : table1_rows()) {
        const WordSpec spec = table1_spec(row.k);
        CHECK(spec.k == row.k);
        CHECK(spec.y.alphabet().size() + spec.y_prime.alphabet().size() == row.k);
        CHECK(table1_word(row.k, 2000).alphabet_size() == row.k);
    }
}

TEST_CASE("table data matches the listed rows") {
    std::string joined;
    for (const auto& row : table1_rows()) {
        joined += std::to_string(row.k) + "|" + std::string(row.cf) + "|" + std::string(row.y) + "|" +
                  std::string(row.y_prime) + "\n";
    }
    CHECK(joined ==
          "3|[0;(2)]|01|2\n"
          "4|[0;2,(1)]|01|23\n"
          "5|[0;(2)]|0102|34\n"
          "6|[0;1,2,1,1,(1,1,1,2)]|0|123415321435\n"
          "7|[0;1,1,3,(1,2,1)]|01|234526432546\n"
          "8|[0;1,3,1,(2)]|01|234526732546237526432576\n"
          "9|[0;1,2,3,(2)]|01|234567284365274863254768\n"
          "10|[0;1,4,2,(3)]|01|234567284963254768294365274869\n");
}

TEST_CASE("word specs validate their alphabets") {
    WordSpec bad{3, cf("[0;(2)]"), gap("01"), gap("3")};
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    WordSpec overlap{3, cf("[0;(2)]"), gap("01"), gap("1")};
    CHECK_THROWS_AS(overlap.validate(), AlphabetOverlap);
    WordSpec ok{3, cf("[0;(2)]"), gap("01"), gap("2")};
    CHECK_NOTHROW(ok.validate());
    CHECK(generate(ok, 39).to_string() == kX3);
}

TEST_CASE("complement") {
    CHECK(complement(FiniteWord::from_string("01")).to_string() == "10");
    CHECK(complement(FiniteWord()).empty());
    CHECK(complement(FiniteWord::from_string("0100")).to_string() == "1011");
    CHECK_THROWS_AS(complement(FiniteWord::from_string("012")), InvalidArgument);
}

}
