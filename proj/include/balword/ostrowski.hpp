#pragma once

#include "balword/cf.hpp"
#include "balword/numeric.hpp"
#include "balword/word.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace balword {

// Ostrowski digits b_0, b_1, ..., b_j stored least-significant first.
// Legality is relative to a slope; see OstrowskiSystem::is_valid.
class OstrowskiRep {
public:
    OstrowskiRep() = default;
    explicit OstrowskiRep(std::vector<unsigned> lsd_digits) : digits_(std::move(lsd_digits)) {}

    const std::vector<unsigned>& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    unsigned digit(std::size_t i) const { return i < digits_.size() ? digits_[i] : 0; }

    // Strips most-significant zeros.
    OstrowskiRep canonical() const;
    // Pads with most-significant zeros up to `width` digits.
    OstrowskiRep padded(std::size_t width) const;
    std::vector<unsigned> msd_digits() const { return {digits_.rbegin(), digits_.rend()}; }

    friend bool operator==(const OstrowskiRep& x, const OstrowskiRep& y) {
        return x.canonical().digits_ == y.canonical().digits_;
    }

private:
    std::vector<unsigned> digits_;
};

enum class IndexBase { one, zero };

struct PrefixFactor {
    std::size_t index;        // j: use the standard word s_j
    unsigned multiplicity;    // b_j
    friend bool operator==(const PrefixFactor&, const PrefixFactor&) = default;
};

// Numeration for one slope. The weights q_i are computed once; integers that
// fit in 64 bits take a fixed-width path, larger ones go through BigInt.
class OstrowskiSystem {
public:
    explicit OstrowskiSystem(ContinuedFraction cf);

    const ContinuedFraction& slope() const noexcept { return cf_; }

    OstrowskiRep encode(std::uint64_t n) const;
    OstrowskiRep encode(const BigInt& n) const;
    // Throws IllegalRep when a digit condition fails.
    BigInt decode(const OstrowskiRep& rep) const;
    std::uint64_t decode_u64(const OstrowskiRep& rep) const;
    bool is_valid(const OstrowskiRep& rep) const;

    // c_alpha at position n: one-based by default (n >= 1); zero-based n maps to n + 1.
    Letter letter_at(std::uint64_t n, IndexBase base = IndexBase::one) const;
    Letter letter_at(const BigInt& n, IndexBase base = IndexBase::one) const;
    // Decreasing j; s_j^{b_j} over nonzero digits concatenates to the length-n prefix.
    std::vector<PrefixFactor> prefix_factorization(std::uint64_t n) const;

    std::string format(const OstrowskiRep& rep) const;
    OstrowskiRep parse(std::string_view msd_text) const;

    // q_i as 64-bit values; q_i for i < small_weights().size() fits.
    const std::vector<std::uint64_t>& small_weights() const noexcept { return q64_; }

private:
    void check_legal(const OstrowskiRep& rep) const;

    ContinuedFraction cf_;
    std::vector<std::uint64_t> q64_;
};

// Letter value from digits: 1 iff the MSD-first string ends with an odd run of zeros.
Letter letter_from_digits(const OstrowskiRep& rep);

OstrowskiRep encode(const BigInt& n, const ContinuedFraction& cf);
BigInt decode(const OstrowskiRep& rep, const ContinuedFraction& cf);
bool is_valid(const OstrowskiRep& rep, const ContinuedFraction& cf);
Letter letter_at(const ContinuedFraction& cf, const BigInt& n, IndexBase base = IndexBase::one);
std::vector<PrefixFactor> prefix_factorization(const ContinuedFraction& cf, std::uint64_t n);

}  // namespace balword
