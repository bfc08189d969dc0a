#pragma once

#include "balword/numeric.hpp"
#include "balword/word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace balword {

struct GapViolation;
class ConstantGapWord;
std::variant<ConstantGapWord, GapViolation> is_constant_gap(const FiniteWord& root);

// One period of a constant-gap word: in root^omega consecutive occurrences of
// each letter a are exactly gaps.at(a) apart. Equivalent to an exact covering
// system with one residue class per letter.
class ConstantGapWord {
public:
    // Throws InvalidArgument unless root is constant-gap (non-primitive roots
    // are reduced to their primitive root).
    explicit ConstantGapWord(const FiniteWord& root);

    const FiniteWord& root() const noexcept { return root_; }
    std::size_t period() const noexcept { return root_.size(); }
    const std::map<Letter, std::size_t>& gaps() const noexcept { return gaps_; }
    std::vector<Letter> alphabet() const;
    // Letter j (0-based) of root^omega.
    Letter at(std::size_t j) const { return root_[j % root_.size()]; }
    // Sum over letters of 1/gap; equals 1 for every valid word.
    Rational density() const;

    friend bool operator==(const ConstantGapWord& x, const ConstantGapWord& y) { return x.root_ == y.root_; }

private:
    ConstantGapWord(FiniteWord root, std::map<Letter, std::size_t> gaps) : root_(std::move(root)), gaps_(std::move(gaps)) {}
    friend std::variant<ConstantGapWord, GapViolation> is_constant_gap(const FiniteWord& root);

    FiniteWord root_;
    std::map<Letter, std::size_t> gaps_;
};

struct GapViolation {
    Letter letter;
    std::size_t first_gap;
    std::size_t second_gap;
    std::vector<std::size_t> positions;  // occurrences of the letter over two periods
};

std::variant<ConstantGapWord, GapViolation> is_constant_gap(const FiniteWord& root);

// 2^{|alphabet|-1}.
std::size_t default_gap_bound(std::size_t alphabet_size);

// Every primitive constant-gap root over exactly `alphabet` (each letter used)
// with all gaps <= gap_bound, rotations included. Sorted by (length, letters).
// Throws BoundTooSmall when gap_bound < |alphabet|.
std::vector<FiniteWord> enumerate_constant_gap(const std::vector<Letter>& alphabet,
                                               std::optional<std::size_t> gap_bound = std::nullopt);

}  // namespace balword
