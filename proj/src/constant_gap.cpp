#include "balword/constant_gap.hpp"

#include "balword/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace balword {

namespace {

std::size_t least_period(const std::vector<Letter>& w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> fail(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && w[i] != w[k]) k = fail[k];
        if (w[i] == w[k]) ++k;
        fail[i + 1] = k;
    }
    return n - fail[n];
}

}  // namespace

std::variant<ConstantGapWord, GapViolation> is_constant_gap(const FiniteWord& root) {
    if (root.empty()) throw InvalidArgument("constant-gap root must be non-empty");
    const std::size_t n = root.size();
    std::map<Letter, std::vector<std::size_t>> positions;
    for (std::size_t i = 0; i < 2 * n; ++i) positions[root[i % n]].push_back(i);

    std::map<Letter, std::size_t> gaps;
    for (const auto& [letter, pos] : positions) {
        const std::size_t gap = pos[1] - pos[0];
        for (std::size_t i = 2; i < pos.size(); ++i) {
            if (pos[i] - pos[i - 1] != gap) return GapViolation{letter, gap, pos[i] - pos[i - 1], pos};
        }
        gaps[letter] = gap;
    }

    std::size_t p = least_period(root.letters());
    FiniteWord primitive = (n % p == 0) ? root.prefix(p) : root;
    return ConstantGapWord(std::move(primitive), std::move(gaps));
}

ConstantGapWord::ConstantGapWord(const FiniteWord& root) {
    auto result = is_constant_gap(root);
    if (auto* v = std::get_if<GapViolation>(&result)) {
        throw InvalidArgument("'" + root.to_string() + "' is not constant-gap: letter " + std::to_string(v->letter) +
                              " has gaps " + std::to_string(v->first_gap) + " and " + std::to_string(v->second_gap));
    }
    *this = std::get<ConstantGapWord>(std::move(result));
}

std::vector<Letter> ConstantGapWord::alphabet() const {
    std::vector<Letter> out;
    for (const auto& [a, g] : gaps_) out.push_back(a);
    return out;
}

Rational ConstantGapWord::density() const {
    Rational sum = 0;
    for (const auto& [a, g] : gaps_) sum += Rational(1, g);
    return sum;
}

std::size_t default_gap_bound(std::size_t alphabet_size) {
    if (alphabet_size == 0) throw InvalidArgument("empty alphabet");
    if (alphabet_size > 63) throw InvalidArgument("alphabet too large");
    return std::size_t(1) << (alphabet_size - 1);
}

namespace {

// Residue-class assignment: the smallest uncovered position must be covered by
// the class of some unused letter; try each letter and each compatible gap.
class CoverEnumerator {
public:
    CoverEnumerator(std::vector<Letter> alphabet, std::size_t gap_bound)
        : alphabet_(std::move(alphabet)), gap_bound_(gap_bound), used_(alphabet_.size(), false) {}

    std::vector<FiniteWord> run() {
        std::vector<int> cover(1, -1);
        extend(cover, 0, Rational(0));
        std::sort(results_.begin(), results_.end(), [](const FiniteWord& a, const FiniteWord& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        results_.erase(std::unique(results_.begin(), results_.end()), results_.end());
        return std::move(results_);
    }

private:
    void extend(const std::vector<int>& cover, std::size_t letters_used, const Rational& density) {
        const std::size_t period = cover.size();
        const auto hole = std::find(cover.begin(), cover.end(), -1);
        const std::size_t remaining = alphabet_.size() - letters_used;
        if (hole == cover.end()) {
            if (remaining == 0) emit(cover);
            return;
        }
        if (remaining == 0) return;
        const std::size_t x = std::size_t(hole - cover.begin());

        for (std::size_t li = 0; li < alphabet_.size(); ++li) {
            if (used_[li]) continue;
            for (std::size_t g = 1; g <= gap_bound_; ++g) {
                const Rational next = density + Rational(1, g);
                // every later letter adds at least 1/gap_bound
                if (next + Rational(remaining - 1, gap_bound_) > 1) continue;
                if (remaining == 1 && next != 1) continue;

                // The class x mod g meets cover (period `period`) in a cycle of length period/gcd.
                const std::size_t cycle = period / std::gcd(period, g);
                bool free = true;
                for (std::size_t t = 0; t < cycle && free; ++t) free = cover[(x + g * t) % period] == -1;
                if (!free) continue;

                const std::size_t new_period = std::lcm(period, g);
                std::vector<int> grown(new_period);
                for (std::size_t i = 0; i < new_period; ++i) grown[i] = cover[i % period];
                for (std::size_t pos = x % g; pos < new_period; pos += g) grown[pos] = int(li);

                used_[li] = true;
                extend(grown, letters_used + 1, next);
                used_[li] = false;
            }
        }
    }

    void emit(const std::vector<int>& cover) {
        std::vector<Letter> letters;
        letters.reserve(cover.size());
        for (int li : cover) letters.push_back(alphabet_[std::size_t(li)]);
        const unsigned size = unsigned(*std::max_element(alphabet_.begin(), alphabet_.end())) + 1;
        results_.emplace_back(std::move(letters), size);
    }

    std::vector<Letter> alphabet_;
    std::size_t gap_bound_;
    std::vector<bool> used_;
    std::vector<FiniteWord> results_;
};

}  // namespace

std::vector<FiniteWord> enumerate_constant_gap(const std::vector<Letter>& alphabet, std::optional<std::size_t> gap_bound) {
    std::set<Letter> unique(alphabet.begin(), alphabet.end());
    if (unique.empty()) throw InvalidArgument("empty alphabet");
    if (unique.size() != alphabet.size()) throw InvalidArgument("alphabet has repeated letters");
    const std::size_t bound = gap_bound.value_or(default_gap_bound(unique.size()));
    if (bound < unique.size()) {
        throw BoundTooSmall("gap bound " + std::to_string(bound) + " cannot cover " + std::to_string(unique.size()) +
                            " letters (each letter needs density >= 1/bound)");
    }
    return CoverEnumerator(std::vector<Letter>(unique.begin(), unique.end()), bound).run();
}

}  // namespace balword
