#pragma once

// Quadratic-time reference implementations used to cross-check the library.

#include "balword/repetitions.hpp"
#include "balword/word.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using balword::FiniteWord;
using balword::Letter;

inline bool has_period(const std::vector<Letter>& w, std::size_t begin, std::size_t end, std::size_t p) {
    for (std::size_t i = begin; i + p < end; ++i) {
        if (w[i] != w[i + p]) return false;
    }
    return true;
}

inline std::vector<std::size_t> periods(const FiniteWord& w) {
    std::vector<std::size_t> out;
    for (std::size_t p = 1; p <= w.size(); ++p) {
        if (has_period(w.letters(), 0, w.size(), p)) out.push_back(p);
    }
    return out;
}

// All maximal runs with period p <= p_max and length >= e_min * p, by (p, start).
inline std::vector<balword::Repetition> maximal_runs(const FiniteWord& w, std::size_t p_max,
                                                     const balword::Rational& e_min) {
    std::vector<balword::Repetition> out;
    const auto& x = w.letters();
    const std::size_t n = x.size();
    for (std::size_t p = 1; p <= p_max && p <= n; ++p) {
        for (std::size_t i = 0; i + p <= n; ++i) {
            if (i > 0 && i - 1 + p < n && x[i - 1] == x[i - 1 + p]) continue;  // not left-maximal
            std::size_t len = p;
            while (i + len < n && x[i + len] == x[i + len - p]) ++len;
            if (balword::Rational(len, p) >= e_min) out.push_back({i, p, len, i + len == n});
        }
    }
    return out;
}

// Every pair of equal-length factors, every letter.
inline bool balanced(const FiniteWord& w, std::size_t max_len) {
    for (std::size_t len = 1; len <= max_len; ++len) {
        for (std::size_t i = 0; i + len <= w.size(); ++i) {
            for (std::size_t j = i + 1; j + len <= w.size(); ++j) {
                std::map<Letter, long> diff;
                for (std::size_t t = 0; t < len; ++t) {
                    ++diff[w[i + t]];
                    --diff[w[j + t]];
                }
                for (const auto& [a, d] : diff) {
                    if (d > 1 || d < -1) return false;
                }
            }
        }
    }
    return true;
}

// Constant gap by definition: every letter recurs with a single distance in root^omega.
inline bool constant_gap(const FiniteWord& root) {
    const std::size_t n = root.size();
    std::map<Letter, std::size_t> gap;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t d = 1;
        while (root[(i + d) % n] != root[i]) ++d;
        auto [it, fresh] = gap.emplace(root[i], d);
        if (!fresh && it->second != d) return false;
    }
    return true;
}

inline FiniteWord random_word(std::mt19937_64& rng, std::size_t max_len, unsigned alphabet) {
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<unsigned> letter(0, alphabet - 1);
    std::vector<Letter> letters(len_dist(rng));
    for (auto& a : letters) a = Letter(letter(rng));
    return FiniteWord(std::move(letters), alphabet);
}

}  // namespace oracle
