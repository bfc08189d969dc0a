#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace balword {

using Letter = std::uint8_t;

// A finite word over {0, ..., alphabet_size - 1}. Letters are stored as small
// integers; the textual form writes each letter as one decimal digit, which
// always suffices here because alphabets never exceed ten letters.
class FiniteWord {
public:
    FiniteWord() = default;
    FiniteWord(std::vector<Letter> letters, unsigned alphabet_size);

    // Alphabet size defaults to max letter + 1 (at least 1).
    static FiniteWord from_letters(std::vector<Letter> letters);
    static FiniteWord from_string(std::string_view digits);
    static FiniteWord from_string(std::string_view digits, unsigned alphabet_size);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    unsigned alphabet_size() const noexcept { return alphabet_size_; }

    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> view() const noexcept { return letters_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }

    FiniteWord slice(std::size_t start, std::size_t length) const;
    FiniteWord prefix(std::size_t length) const { return slice(0, length); }
    std::size_t count(Letter a) const;

    std::string to_string() const;

    friend FiniteWord operator+(const FiniteWord& lhs, const FiniteWord& rhs);
    FiniteWord& operator+=(const FiniteWord& rhs);
    FiniteWord power(std::size_t times) const;

    friend bool operator==(const FiniteWord& lhs, const FiniteWord& rhs) {
        return lhs.letters_ == rhs.letters_;
    }
    friend auto operator<=>(const FiniteWord& lhs, const FiniteWord& rhs) {
        return lhs.letters_ <=> rhs.letters_;
    }

private:
    std::vector<Letter> letters_;
    unsigned alphabet_size_ = 1;
};

}  // namespace balword
