#include "balword/wordgen.hpp"

#include "balword/errors.hpp"
#include "balword/ostrowski.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace balword {

namespace {

constexpr std::array<Table1Row, 8> kTable1{{
    {3, "sqrt(2)-1", "[0;(2)]", "01", "2", RepetitionLaw::semi_standard_square},
    {4, "1/phi^2", "[0;2,(1)]", "01", "23", RepetitionLaw::doubled_standard},
    {5, "sqrt(2)-1", "[0;(2)]", "0102", "34", RepetitionLaw::none},
    {6, "(78-2sqrt(6))/101", "[0;1,2,1,1,(1,1,1,2)]", "0", "123415321435", RepetitionLaw::none},
    {7, "(63-sqrt(10))/107", "[0;1,1,3,(1,2,1)]", "01", "234526432546", RepetitionLaw::none},
    {8, "(23+sqrt(2))/31", "[0;1,3,1,(2)]", "01", "234526732546237526432576", RepetitionLaw::none},
    {9, "(23-sqrt(2))/31", "[0;1,2,3,(2)]", "01", "234567284365274863254768", RepetitionLaw::none},
    {10, "(109+sqrt(13))/138", "[0;1,4,2,(3)]", "01", "234567284963254768294365274869", RepetitionLaw::none},
}};

}  // namespace

void WordSpec::validate() const {
    std::set<Letter> a, b;
    for (Letter l : y.alphabet()) a.insert(l);
    for (Letter l : y_prime.alphabet()) b.insert(l);
    for (Letter l : a) {
        if (b.count(l)) throw AlphabetOverlap("letter " + std::to_string(l) + " appears in both y and y'");
    }
    std::set<Letter> all = a;
    all.insert(b.begin(), b.end());
    if (all.size() != k || *all.rbegin() != k - 1) {
        throw InvalidArgument("y and y' must together use exactly the letters 0.." + std::to_string(k - 1));
    }
}

std::span<const Table1Row> table1_rows() { return kTable1; }

WordSpec table1_spec(unsigned k) {
    for (const auto& row : kTable1) {
        if (row.k != k) continue;
        WordSpec spec{k, ContinuedFraction::parse(row.cf), ConstantGapWord(FiniteWord::from_string(row.y)),
                      ConstantGapWord(FiniteWord::from_string(row.y_prime)), row.law};
        spec.validate();
        return spec;
    }
    throw UnsupportedK("the construction table covers 3 <= k <= 10, got k = " + std::to_string(k));
}

namespace {

FiniteWord sturmian_prefix_by_standard_words(const ContinuedFraction& cf, std::size_t n) {
    std::vector<Letter> prev{0};
    std::vector<Letter> cur(cf.partial_quotient(1) - 1, 0);
    cur.push_back(1);
    // s_n is a prefix of s_{n+1} for n >= 1.
    for (std::size_t i = 2; cur.size() < n; ++i) {
        const unsigned d = cf.partial_quotient(i);
        std::vector<Letter> next;
        next.reserve(cur.size() * d + prev.size());
        for (unsigned t = 0; t < d; ++t) next.insert(next.end(), cur.begin(), cur.end());
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(n);
    return FiniteWord(std::move(cur), 2);
}

}  // namespace

FiniteWord sturmian_prefix_by_numeration(const ContinuedFraction& cf, std::size_t n) {
    const OstrowskiSystem system(cf);
    std::vector<Letter> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = system.letter_at(std::uint64_t(i + 1));
    return FiniteWord(std::move(out), 2);
}

FiniteWord sturmian_prefix(const ContinuedFraction& cf, std::size_t n) {
    if (n == 0) throw InvalidArgument("prefix length must be positive");
    if (!cf.is_quadratic()) throw NotQuadratic("characteristic words need an irrational slope");
    FiniteWord direct = sturmian_prefix_by_standard_words(cf, n);
    if (direct != sturmian_prefix_by_numeration(cf, n)) {
        throw std::logic_error("standard-word and numeration generators disagree for " + cf.to_string());
    }
    return direct;
}

FiniteWord hubert_expand(const FiniteWord& base, const ConstantGapWord& y, const ConstantGapWord& y_prime) {
    const auto a = y.alphabet();
    const auto b = y_prime.alphabet();
    for (Letter l : a) {
        if (std::find(b.begin(), b.end(), l) != b.end()) {
            throw AlphabetOverlap("letter " + std::to_string(l) + " appears in both substitution words");
        }
    }
    std::vector<Letter> out;
    out.reserve(base.size());
    std::size_t zeros = 0, ones = 0;
    for (Letter c : base.view()) {
        if (c == 0) {
            out.push_back(y.at(zeros++));
        } else if (c == 1) {
            out.push_back(y_prime.at(ones++));
        } else {
            throw InvalidArgument("Hubert expansion needs a binary base word");
        }
    }
    const unsigned size = std::max(y.root().alphabet_size(), y_prime.root().alphabet_size());
    return FiniteWord(std::move(out), size);
}

FiniteWord generate(const WordSpec& spec, std::size_t n) {
    spec.validate();
    FiniteWord expanded = hubert_expand(sturmian_prefix(spec.cf, n), spec.y, spec.y_prime);
    return FiniteWord(expanded.letters(), spec.k);
}

FiniteWord table1_word(unsigned k, std::size_t n) { return generate(table1_spec(k), n); }

FiniteWord complement(const FiniteWord& base) {
    std::vector<Letter> out;
    out.reserve(base.size());
    for (Letter c : base.view()) {
        if (c > 1) throw InvalidArgument("complement needs a binary word");
        out.push_back(Letter(1 - c));
    }
    return FiniteWord(std::move(out), 2);
}

}  // namespace balword
