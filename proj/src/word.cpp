#include "balword/word.hpp"

#include "balword/errors.hpp"
#include "balword/numeric.hpp"

#include <algorithm>

namespace balword {

FiniteWord::FiniteWord(std::vector<Letter> letters, unsigned alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ == 0) throw InvalidArgument("alphabet size must be positive");
    for (Letter a : letters_) {
        if (a >= alphabet_size_) {
            throw InvalidArgument("letter " + std::to_string(a) + " outside alphabet of size " +
                                  std::to_string(alphabet_size_));
        }
    }
}

FiniteWord FiniteWord::from_letters(std::vector<Letter> letters) {
    unsigned size = 1;
    if (!letters.empty()) size = unsigned(*std::max_element(letters.begin(), letters.end())) + 1;
    return FiniteWord(std::move(letters), size);
}

FiniteWord FiniteWord::from_string(std::string_view digits) {
    std::vector<Letter> out;
    out.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw ParseError(std::string("not a letter digit: '") + c + "'");
        out.push_back(Letter(c - '0'));
    }
    return from_letters(std::move(out));
}

FiniteWord FiniteWord::from_string(std::string_view digits, unsigned alphabet_size) {
    return FiniteWord(from_string(digits).letters_, alphabet_size);
}

FiniteWord FiniteWord::slice(std::size_t start, std::size_t length) const {
    if (start > size() || length > size() - start) throw InvalidArgument("slice out of range");
    FiniteWord out;
    out.alphabet_size_ = alphabet_size_;
    out.letters_.assign(letters_.begin() + std::ptrdiff_t(start),
                        letters_.begin() + std::ptrdiff_t(start + length));
    return out;
}

std::size_t FiniteWord::count(Letter a) const {
    return std::size_t(std::count(letters_.begin(), letters_.end(), a));
}

std::string FiniteWord::to_string() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter a : letters_) out.push_back(char('0' + a));
    return out;
}

FiniteWord operator+(const FiniteWord& lhs, const FiniteWord& rhs) {
    FiniteWord out = lhs;
    out += rhs;
    return out;
}

FiniteWord& FiniteWord::operator+=(const FiniteWord& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    alphabet_size_ = std::max(alphabet_size_, rhs.alphabet_size_);
    return *this;
}

FiniteWord FiniteWord::power(std::size_t times) const {
    FiniteWord out;
    out.alphabet_size_ = alphabet_size_;
    out.letters_.reserve(letters_.size() * times);
    for (std::size_t i = 0; i < times; ++i) out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
    return out;
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) throw ParseError("empty integer");
        std::size_t i = 0;
        bool negative = false;
        if (s[0] == '-' || s[0] == '+') {
            negative = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw ParseError("sign without digits");
        BigInt v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw ParseError("bad digit in '" + std::string(s) + "'");
            v = v * 10 + (s[i] - '0');
        }
        return negative ? BigInt(-v) : v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator");
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos) {
            throw ParseError("bad decimal '" + std::string(text) + "'");
        }
        bool negative = !whole.empty() && whole[0] == '-';
        BigInt int_part = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_int(whole);
        if (int_part < 0) int_part = -int_part;
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational value = Rational(int_part) + Rational(parse_int(frac), scale);
        return negative ? Rational(-value) : value;
    }
    return Rational(parse_int(text));
}

std::string to_string(const Rational& r) {
    if (denominator_of(r) == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

}  // namespace balword
