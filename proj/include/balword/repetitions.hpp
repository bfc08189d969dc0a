#pragma once

#include "balword/cf.hpp"
#include "balword/numeric.hpp"
#include "balword/word.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace balword {

// w[start, start + length) has period `period` (not necessarily least).
struct Repetition {
    std::size_t start;
    std::size_t period;
    std::size_t length;
    bool right_open = false;  // touches the end of the scanned word

    Rational exponent() const { return Rational(length, period); }
    // length/period >= num/den, without building a rational
    bool exponent_at_least(std::uint64_t num, std::uint64_t den) const {
        return (unsigned __int128)length * den >= (unsigned __int128)num * period;
    }
    friend bool operator==(const Repetition&, const Repetition&) = default;
};

// fail[i] = longest proper border of w[0, i).
std::vector<std::size_t> border_table(std::span<const Letter> w);

std::vector<std::size_t> periods(const FiniteWord& w);
std::size_t least_period(const FiniteWord& w);
Rational exponent(const FiniteWord& w);
bool is_primitive(const FiniteWord& w);
FiniteWord fractional_root(const FiniteWord& w);
// Largest r with u^r a factor of w (0 if u does not occur).
std::size_t integral_index(const FiniteWord& u, const FiniteWord& w);

struct ScanOptions {
    unsigned threads = 1;
};

// Every maximal run with period p <= p_max and length/p >= e_min, sorted by (p, start).
// A run is maximal when extending it one letter left or right breaks period p.
std::vector<Repetition> maximal_repetitions(const FiniteWord& w, std::size_t p_max, const Rational& e_min,
                                            ScanOptions options = {});

enum class BoundaryPolicy {
    include_right_open,  // w is a factor: runs at the end are real
    exclude_right_open,  // w is a prefix: runs at the end may extend further
};

struct CriticalExponent {
    Rational value;
    Repetition witness;
    friend bool operator==(const CriticalExponent&, const CriticalExponent&) = default;
};

// max length/p over maximal runs with p <= p_max; ties go to the first run in (p, start) order.
CriticalExponent critical_exponent_estimate(const FiniteWord& w, std::size_t p_max,
                                            BoundaryPolicy policy = BoundaryPolicy::include_right_open,
                                            ScanOptions options = {});

// First factor (by period, then start) with exponent >= bound, any period.
std::optional<Repetition> find_repetition_at_least(std::span<const Letter> w, const Rational& bound);

bool is_conjugate(const FiniteWord& u, const FiniteWord& v);

struct ConjugateClass {
    enum class Kind { none, standard, semi_standard };
    Kind kind = Kind::none;
    long n = 0;       // standard index; -1 denotes s_{-1} = "1"
    unsigned t = 0;   // semi-standard multiplicity
    friend bool operator==(const ConjugateClass&, const ConjugateClass&) = default;
    std::string to_string() const;
};

// Tries s_{-1}, s_0, ..., s_{n_max} and s_{n,t} (2 <= n <= n_max) of length |u|.
ConjugateClass classify_conjugate(const FiniteWord& u, const ContinuedFraction& cf, std::size_t n_max);

struct PeriodDecomposition {
    std::vector<std::size_t> periods;     // p_1 < ... < p_r
    std::vector<FiniteWord> differences;  // E_2..E_r with P_i = P_{i-1} E_i
    std::vector<ConjugateClass> classes;  // filled when a slope is supplied
    bool lengths_non_increasing = true;
};

// Throws std::logic_error if the prefix-period identity fails (it cannot for valid input).
PeriodDecomposition period_decomposition(const FiniteWord& w, const ContinuedFraction* cf = nullptr,
                                         std::size_t n_max = 64);

}  // namespace balword
