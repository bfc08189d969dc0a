#pragma once

#include "balword/word.hpp"

#include <cstddef>
#include <optional>

namespace balword {

struct BalanceViolation {
    Letter letter;
    std::size_t length;  // window length
    std::size_t i;       // first window start
    std::size_t j;       // second window start, j > i
    std::size_t count_i;
    std::size_t count_j;
    friend bool operator==(const BalanceViolation&, const BalanceViolation&) = default;
};

// A finite verdict: "balanced" means no violation among windows of length <= checked_up_to.
struct BalanceReport {
    bool balanced;
    std::size_t checked_up_to;
    std::optional<BalanceViolation> violation;
    friend bool operator==(const BalanceReport&, const BalanceReport&) = default;
};

// Reports the violation minimal in (length, i, j, letter). Requires 1 <= max_len <= |w|.
BalanceReport check_balance(const FiniteWord& w, std::size_t max_len);

}  // namespace balword
