#pragma once

#include "balword/cf.hpp"
#include "balword/constant_gap.hpp"
#include "balword/numeric.hpp"
#include "balword/ostrowski.hpp"
#include "balword/repetitions.hpp"
#include "balword/wordgen.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace balword {

struct UltimatelyPeriodic {
    std::vector<std::uint64_t> preperiod;
    std::vector<std::uint64_t> period;
    std::uint64_t at(std::size_t i) const;
    friend bool operator==(const UltimatelyPeriodic&, const UltimatelyPeriodic&) = default;
};

// (q_i - p_i) mod m and p_i mod m, each with minimal preperiod and period.
struct WeightPeriods {
    std::uint64_t modulus;
    UltimatelyPeriodic zeros;
    UltimatelyPeriodic ones;
    friend bool operator==(const WeightPeriods&, const WeightPeriods&) = default;
};

WeightPeriods weight_periods(const ContinuedFraction& cf, std::uint64_t m);

enum class ReadingOrder { lsd_first, msd_first };

// Deterministic finite automaton with output over digits 0..digit_bound.
struct Dfao {
    std::size_t initial = 0;
    unsigned digit_bound = 1;
    ReadingOrder order = ReadingOrder::lsd_first;
    std::vector<std::size_t> delta;  // delta[state * (digit_bound + 1) + digit]
    std::vector<Letter> output;

    std::size_t num_states() const noexcept { return output.size(); }
    std::size_t next(std::size_t state, unsigned digit) const { return delta[state * (digit_bound + 1) + digit]; }
    friend bool operator==(const Dfao&, const Dfao&) = default;
};

struct SynthesisOptions {
    bool minimize = true;
};

// LSD-first automaton reading the Ostrowski digits of n >= 1 and emitting x[n]
// (one-based) for x obtained from c_alpha by substituting y for 0's and y' for 1's.
Dfao synthesize(const ContinuedFraction& cf, const ConstantGapWord& y, const ConstantGapWord& y_prime,
                SynthesisOptions options = {});

// 4 * |y| * |y'| * (index phases) for the product construction.
std::size_t synthesis_state_bound(const ContinuedFraction& cf, const ConstantGapWord& y,
                                  const ConstantGapWord& y_prime);

// Moore partition refinement, then canonical BFS numbering from the initial state.
Dfao minimize(const Dfao& dfao);
// Same outputs with the opposite reading order (subset-of-functions construction), minimized.
// The construction can be exponential; StateLimit once it exceeds max_states.
Dfao reverse_reading_order(const Dfao& dfao, std::size_t max_states = 1000000);

Letter run_digits(const Dfao& dfao, std::span<const unsigned> digits_in_reading_order);
// Feeds rep in the automaton's reading order. Throws DigitOutOfRange.
Letter run(const Dfao& dfao, const OstrowskiRep& rep);

struct EquivalenceResult {
    bool ok;
    std::optional<std::uint64_t> first_mismatch;
    friend bool operator==(const EquivalenceResult&, const EquivalenceResult&) = default;
};

EquivalenceResult equivalence_check(const Dfao& dfao, const WordSpec& spec, std::uint64_t n);

std::string emit_text(const Dfao& dfao);
Dfao parse_text(std::string_view text);
std::string emit_dot(const Dfao& dfao, std::string_view name = "dfao");

// True iff the run satisfies the Walnut-style predicate
// "Aj (den*j <= (num-den)*p) => X[i+j] = X[i+j+p]", i.e. length >= p + floor((e-1)p) + 1.
bool walnut_qualifies(std::size_t length, std::size_t period, const Rational& e_min);

struct PeriodLawRecord {
    std::size_t period;
    std::size_t n;            // longest closed run of this period has length n + period
    std::size_t start;        // start of the first such run
    std::size_t qualifying_runs;
    bool uniform_length;      // every qualifying run has length n + period
    bool matches_law;
    long law_index = -1;      // j in the closed form, -1 when unmatched
    Rational exponent() const { return Rational(n + period, period); }
    friend bool operator==(const PeriodLawRecord&, const PeriodLawRecord&) = default;
};

std::vector<PeriodLawRecord> walnut_emulation_report(const WordSpec& spec, std::size_t n, const Rational& e_min,
                                                     std::size_t p_max = 1000);

}  // namespace balword
