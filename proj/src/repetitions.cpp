#include "balword/repetitions.hpp"

#include "balword/errors.hpp"

#include <algorithm>
#include <thread>

namespace balword {

std::vector<std::size_t> border_table(std::span<const Letter> w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> fail(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && w[i] != w[k]) k = fail[k];
        if (w[i] == w[k]) ++k;
        fail[i + 1] = k;
    }
    return fail;
}

std::vector<std::size_t> periods(const FiniteWord& w) {
    if (w.empty()) throw InvalidArgument("periods of the empty word");
    const auto fail = border_table(w.view());
    std::vector<std::size_t> out;
    for (std::size_t b = fail[w.size()];; b = fail[b]) {
        out.push_back(w.size() - b);
        if (b == 0) break;
    }
    return out;
}

std::size_t least_period(const FiniteWord& w) {
    if (w.empty()) throw InvalidArgument("least period of the empty word");
    return w.size() - border_table(w.view())[w.size()];
}

Rational exponent(const FiniteWord& w) { return Rational(w.size(), least_period(w)); }

bool is_primitive(const FiniteWord& w) {
    const std::size_t p = least_period(w);
    return p == w.size() || w.size() % p != 0;
}

FiniteWord fractional_root(const FiniteWord& w) { return w.prefix(least_period(w)); }

namespace {

std::vector<bool> occurrences(std::span<const Letter> pattern, std::span<const Letter> text) {
    std::vector<bool> occ(text.size(), false);
    const std::size_t m = pattern.size();
    if (m == 0 || m > text.size()) return occ;
    const auto fail = border_table(pattern);
    for (std::size_t i = 0, k = 0; i < text.size(); ++i) {
        while (k > 0 && (k == m || text[i] != pattern[k])) k = fail[k];
        if (text[i] == pattern[k]) ++k;
        if (k == m) occ[i + 1 - m] = true;
    }
    return occ;
}

}  // namespace

std::size_t integral_index(const FiniteWord& u, const FiniteWord& w) {
    if (u.empty()) throw InvalidArgument("integral index of the empty word");
    const auto occ = occurrences(u.view(), w.view());
    const std::size_t m = u.size();
    std::vector<std::size_t> chain(w.size() + m, 0);
    std::size_t best = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
        if (!occ[i]) continue;
        chain[i] = 1 + chain[i + m];
        best = std::max(best, chain[i]);
    }
    return best;
}

namespace {

// Calls emit(start, length, right_open) for every maximal run of period p, in start order.
template <typename Emit>
void scan_period(std::span<const Letter> w, std::size_t p, Emit&& emit) {
    const std::size_t n = w.size();
    if (p > n) return;
    const Letter* a = w.data();
    const std::size_t comparisons = n - p;
    std::size_t start = 0;
    for (std::size_t j = 0; j < comparisons; ++j) {
        if (a[j] != a[j + p]) {
            emit(start, j - start + p, false);
            start = j + 1;
        }
    }
    emit(start, comparisons - start + p, true);
}

std::uint64_t to_u64(const BigInt& v) { return v.convert_to<std::uint64_t>(); }

}  // namespace

std::vector<Repetition> maximal_repetitions(const FiniteWord& w, std::size_t p_max, const Rational& e_min,
                                            ScanOptions options) {
    if (p_max < 1) throw InvalidArgument("p_max must be at least 1");
    const std::size_t top = std::min(p_max, w.size());
    const Rational floor_e = e_min < 0 ? Rational(0) : e_min;
    const std::uint64_t num = to_u64(numerator_of(floor_e));
    const std::uint64_t den = to_u64(denominator_of(floor_e));

    auto scan_range = [&](std::size_t lo, std::size_t hi, std::vector<Repetition>& out) {
        for (std::size_t p = lo; p <= hi; ++p) {
            scan_period(w.view(), p, [&](std::size_t start, std::size_t length, bool open) {
                Repetition r{start, p, length, open};
                if (r.exponent_at_least(num, den)) out.push_back(r);
            });
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, unsigned(top)));
    if (threads == 1) {
        std::vector<Repetition> out;
        scan_range(1, top, out);
        return out;
    }
    // Interleaving would break the (p, start) order; contiguous blocks keep it.
    std::vector<std::vector<Repetition>> parts(threads);
    {
        std::vector<std::jthread> pool;
        const std::size_t block = (top + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t lo = 1 + t * block;
            const std::size_t hi = std::min(top, lo + block - 1);
            if (lo > hi) break;
            pool.emplace_back([&, lo, hi, t] { scan_range(lo, hi, parts[t]); });
        }
    }
    std::vector<Repetition> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

CriticalExponent critical_exponent_estimate(const FiniteWord& w, std::size_t p_max, BoundaryPolicy policy,
                                            ScanOptions options) {
    if (p_max < 1) throw InvalidArgument("p_max must be at least 1");
    if (w.empty()) throw InvalidArgument("critical exponent of the empty word");
    const std::size_t top = std::min(p_max, w.size());
    const bool keep_open = policy == BoundaryPolicy::include_right_open;

    auto best_in = [&](std::size_t lo, std::size_t hi) {
        std::optional<Repetition> best;
        for (std::size_t p = lo; p <= hi; ++p) {
            scan_period(w.view(), p, [&](std::size_t start, std::size_t length, bool open) {
                if (open && !keep_open) return;
                // strict >: earlier (p, start) wins ties
                if (!best || (unsigned __int128)length * best->period > (unsigned __int128)best->length * p) {
                    best = Repetition{start, p, length, open};
                }
            });
        }
        return best;
    };

    std::optional<Repetition> best;
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, unsigned(top)));
    if (threads == 1) {
        best = best_in(1, top);
    } else {
        std::vector<std::optional<Repetition>> parts(threads);
        {
            std::vector<std::jthread> pool;
            const std::size_t block = (top + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const std::size_t lo = 1 + t * block;
                const std::size_t hi = std::min(top, lo + block - 1);
                if (lo > hi) break;
                pool.emplace_back([&, lo, hi, t] { parts[t] = best_in(lo, hi); });
            }
        }
        for (const auto& part : parts) {
            if (part && (!best || (unsigned __int128)part->length * best->period >
                                      (unsigned __int128)best->length * part->period)) {
                best = part;
            }
        }
    }
    if (!best) throw NotFound("no run satisfies the boundary policy (every run touches the end)");
    return {best->exponent(), *best};
}

std::optional<Repetition> find_repetition_at_least(std::span<const Letter> w, const Rational& bound) {
    const std::size_t n = w.size();
    if (n == 0) return std::nullopt;
    const std::uint64_t num = to_u64(numerator_of(bound));
    const std::uint64_t den = to_u64(denominator_of(bound));
    const Letter* a = w.data();
    // a factor of period p has length <= n, so p <= n * den / num
    for (std::size_t p = 1; p <= n && (unsigned __int128)num * p <= (unsigned __int128)n * den; ++p) {
        // need length >= ceil(num * p / den), i.e. at least `need` matches
        const std::uint64_t min_len = (num * p + den - 1) / den;
        const std::size_t need = min_len > p ? std::size_t(min_len - p) : 0;
        std::size_t run = 0;
        for (std::size_t j = 0; j + p < n; ++j) {
            if (a[j] == a[j + p]) {
                ++run;
                if (run >= need) {
                    const std::size_t start = j + 1 - run;
                    std::size_t end = j + 1;
                    while (end + p < n && a[end] == a[end + p]) ++end;
                    return Repetition{start, p, end - start + p, end + p == n};
                }
            } else {
                run = 0;
            }
        }
        if (need == 0) return Repetition{0, p, p, p == n};
    }
    return std::nullopt;
}

bool is_conjugate(const FiniteWord& u, const FiniteWord& v) {
    if (u.size() != v.size()) return false;
    if (u.empty()) return true;
    const FiniteWord uu = u + u;
    const auto occ = occurrences(v.view(), uu.view());
    return std::find(occ.begin(), occ.end(), true) != occ.end();
}

std::string ConjugateClass::to_string() const {
    switch (kind) {
        case Kind::standard: return "Standard(" + std::to_string(n) + ")";
        case Kind::semi_standard: return "SemiStandard(" + std::to_string(n) + "," + std::to_string(t) + ")";
        case Kind::none: break;
    }
    return "None";
}

ConjugateClass classify_conjugate(const FiniteWord& u, const ContinuedFraction& cf, std::size_t n_max) {
    if (u.empty()) throw InvalidArgument("classify_conjugate needs a non-empty word");
    const FiniteWord bin_u(u.letters(), std::max(2u, u.alphabet_size()));
    auto matches = [&](const FiniteWord& s) { return s.size() == u.size() && is_conjugate(s, bin_u); };

    FiniteWord older = FiniteWord::from_string("1", 2);  // s_{-1}
    FiniteWord prev = FiniteWord::from_string("0", 2);   // s_0
    if (matches(older)) return {ConjugateClass::Kind::standard, -1, 0};
    if (matches(prev)) return {ConjugateClass::Kind::standard, 0, 0};
    if (n_max == 0) return {};
    FiniteWord cur = prev.power(cf.partial_quotient(1) - 1) + older;
    if (matches(cur)) return {ConjugateClass::Kind::standard, 1, 0};
    for (std::size_t n = 2; n <= n_max && n <= cf.length(); ++n) {
        if (prev.size() + cur.size() > u.size()) break;
        const unsigned d = cf.partial_quotient(n);
        // s_{n,t} = cur^t prev for 1 <= t < d; s_n is t = d
        if (std::size_t(d) * cur.size() + prev.size() == u.size()) {
            FiniteWord s = cur.power(d) + prev;
            if (matches(s)) return {ConjugateClass::Kind::standard, long(n), 0};
        }
        for (unsigned t = 1; t < d; ++t) {
            if (std::size_t(t) * cur.size() + prev.size() != u.size()) continue;
            if (matches(cur.power(t) + prev)) return {ConjugateClass::Kind::semi_standard, long(n), t};
        }
        FiniteWord next = cur.power(d) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {};
}

PeriodDecomposition period_decomposition(const FiniteWord& w, const ContinuedFraction* cf, std::size_t n_max) {
    PeriodDecomposition out;
    out.periods = periods(w);
    const std::size_t n = w.size();
    const auto span = w.view();
    for (std::size_t i = 1; i < out.periods.size(); ++i) {
        const std::size_t lo = out.periods[i - 1];
        const std::size_t hi = out.periods[i];
        FiniteWord diff = w.slice(lo, hi - lo);
        // The prefix of length n - lo has period hi - lo, with fractional root E_i.
        const std::size_t len = n - lo;
        const std::size_t q = hi - lo;
        for (std::size_t j = 0; j + q < len; ++j) {
            if (span[j] != span[j + q]) throw std::logic_error("prefix-period identity violated");
        }
        for (std::size_t j = 0; j < q; ++j) {
            if (diff[j] != span[j]) throw std::logic_error("difference word is not the prefix root");
        }
        if (!out.differences.empty() && diff.size() > out.differences.back().size()) out.lengths_non_increasing = false;
        if (cf) out.classes.push_back(classify_conjugate(diff, *cf, n_max));
        out.differences.push_back(std::move(diff));
    }
    return out;
}

}  // namespace balword
