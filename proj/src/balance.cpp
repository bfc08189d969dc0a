#include "balword/balance.hpp"

#include "balword/errors.hpp"

#include <algorithm>
#include <vector>

namespace balword {

BalanceReport check_balance(const FiniteWord& w, std::size_t max_len) {
    const std::size_t n = w.size();
    if (max_len < 1 || max_len > n) throw InvalidArgument("check_balance needs 1 <= max_len <= |w|");
    const unsigned k = w.alphabet_size();

    // prefix[a * (n + 1) + i] = |w[0, i)|_a
    std::vector<std::size_t> prefix(std::size_t(k) * (n + 1), 0);
    for (unsigned a = 0; a < k; ++a) {
        std::size_t* row = &prefix[a * (n + 1)];
        for (std::size_t i = 0; i < n; ++i) row[i + 1] = row[i] + (w[i] == a ? 1 : 0);
    }
    auto count = [&](unsigned a, std::size_t start, std::size_t len) {
        const std::size_t* row = &prefix[a * (n + 1)];
        return row[start + len] - row[start];
    };

    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t windows = n - len + 1;
        std::vector<unsigned> bad;
        for (unsigned a = 0; a < k; ++a) {
            std::size_t lo = len, hi = 0;
            for (std::size_t i = 0; i < windows; ++i) {
                const std::size_t c = count(a, i, len);
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            if (hi >= lo + 2) bad.push_back(a);
        }
        if (bad.empty()) continue;

        // Smallest i having a partner j > i, then smallest j, then smallest letter.
        for (std::size_t i = 0; i < windows; ++i) {
            std::optional<BalanceViolation> best;
            for (unsigned a : bad) {
                const std::size_t ci = count(a, i, len);
                for (std::size_t j = i + 1; j < windows; ++j) {
                    if (best && j >= best->j) break;
                    const std::size_t cj = count(a, j, len);
                    if (ci >= cj + 2 || cj >= ci + 2) {
                        best = BalanceViolation{Letter(a), len, i, j, ci, cj};
                        break;
                    }
                }
            }
            if (best) return {false, len, best};
        }
    }
    return {true, max_len, std::nullopt};
}

}  // namespace balword
