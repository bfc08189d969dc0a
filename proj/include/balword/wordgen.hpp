#pragma once

#include "balword/cf.hpp"
#include "balword/constant_gap.hpp"
#include "balword/word.hpp"

#include <cstddef>
#include <span>
#include <string_view>

namespace balword {

// Closed form obeyed by the long repetitions of a table word.
enum class RepetitionLaw {
    none,
    // period q_{j-1} + q_j, length 2(q_{j-1} + q_j) + q_j - 2
    semi_standard_square,
    // period 2 q_j, length 2 q_j + q_{j+1} - 2
    doubled_standard,
};

struct WordSpec {
    unsigned k;
    ContinuedFraction cf;
    ConstantGapWord y;       // replaces the 0's
    ConstantGapWord y_prime; // replaces the 1's
    RepetitionLaw law = RepetitionLaw::none;

    // Throws AlphabetOverlap / InvalidArgument unless the alphabets partition {0..k-1}.
    void validate() const;
};

struct Table1Row {
    unsigned k;
    std::string_view slope;  // closed form of the slope
    std::string_view cf;
    std::string_view y;
    std::string_view y_prime;
    RepetitionLaw law;
};

std::span<const Table1Row> table1_rows();
// Throws UnsupportedK outside [3, 10].
WordSpec table1_spec(unsigned k);

// Length-n prefix of c_alpha by iterating s_n = s_{n-1}^{d_n} s_{n-2};
// cross-checked position by position against the numeration generator.
FiniteWord sturmian_prefix(const ContinuedFraction& cf, std::size_t n);
// Same prefix letter by letter from Ostrowski representations.
FiniteWord sturmian_prefix_by_numeration(const ContinuedFraction& cf, std::size_t n);

// j-th 0 of base becomes letter j of y^omega, j-th 1 letter j of y'^omega.
FiniteWord hubert_expand(const FiniteWord& base, const ConstantGapWord& y, const ConstantGapWord& y_prime);

FiniteWord generate(const WordSpec& spec, std::size_t n);
FiniteWord table1_word(unsigned k, std::size_t n);

FiniteWord complement(const FiniteWord& base);

}  // namespace balword
