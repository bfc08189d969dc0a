#include "balword/cf.hpp"

#include "balword/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <optional>

namespace balword {

namespace {

std::vector<unsigned> parse_terms(std::string_view text) {
    std::vector<unsigned> out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view item = text.substr(i, j - i);
        if (item.empty()) throw ParseError("empty partial quotient");
        unsigned long v = 0;
        for (char c : item) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad partial quotient '" + std::string(item) + "'");
            v = v * 10 + unsigned(c - '0');
            if (v > std::numeric_limits<unsigned>::max()) throw ParseError("partial quotient too large");
        }
        out.push_back(unsigned(v));
        i = j + 1;
        if (j + 1 == text.size()) throw ParseError("trailing comma");
    }
    return out;
}

std::string join(const std::vector<unsigned>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<unsigned> preperiod, std::vector<unsigned> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    for (unsigned d : preperiod_) {
        if (d == 0) throw InvalidArgument("partial quotients d_i (i >= 1) must be positive");
    }
    for (unsigned d : period_) {
        if (d == 0) throw InvalidArgument("partial quotients d_i (i >= 1) must be positive");
    }
    if (preperiod_.empty() && period_.empty()) throw InvalidArgument("slope [0] is not in (0,1)");
    if (period_.empty() && preperiod_.size() == 1 && preperiod_[0] == 1) {
        throw InvalidArgument("slope [0;1] = 1 is not in (0,1)");
    }
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    std::string_view s = compact;
    if (s.size() < 3 || s.front() != '[' || s.back() != ']') throw ParseError("continued fraction must look like [0;a,b,(p,q)]");
    s = s.substr(1, s.size() - 2);
    std::size_t sep = s.find_first_of(";,");
    if (sep == std::string_view::npos) throw ParseError("missing ';' after d_0");
    if (s.substr(0, sep) != "0") throw ParseError("d_0 must be 0 (slopes lie in (0,1))");
    s = s.substr(sep + 1);

    std::vector<unsigned> pre;
    std::vector<unsigned> per;
    std::size_t open = s.find('(');
    if (open == std::string_view::npos) {
        pre = parse_terms(s);
    } else {
        if (s.back() != ')') throw ParseError("period group must close the expansion");
        std::string_view head = s.substr(0, open);
        if (!head.empty()) {
            if (head.back() != ',') throw ParseError("expected ',' before period group");
            pre = parse_terms(head.substr(0, head.size() - 1));
        }
        per = parse_terms(s.substr(open + 1, s.size() - open - 2));
        if (per.empty()) throw ParseError("empty period group");
    }
    try {
        return ContinuedFraction(std::move(pre), std::move(per));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

std::string ContinuedFraction::to_string() const {
    std::string out = "[0;";
    out += join(preperiod_);
    if (!period_.empty()) {
        if (!preperiod_.empty()) out += ',';
        out += '(' + join(period_) + ')';
    }
    return out + ']';
}

unsigned ContinuedFraction::partial_quotient(std::size_t n) const {
    if (n == 0) return 0;
    if (n <= preperiod_.size()) return preperiod_[n - 1];
    if (period_.empty()) throw InvalidArgument("partial quotient d_" + std::to_string(n) + " beyond finite expansion");
    return period_[(n - 1 - preperiod_.size()) % period_.size()];
}

std::size_t ContinuedFraction::length() const noexcept {
    return period_.empty() ? preperiod_.size() : std::numeric_limits<std::size_t>::max();
}

std::size_t ContinuedFraction::phase(std::size_t n) const {
    std::size_t m = preperiod_.size();
    if (n <= m || period_.empty()) return n;
    return m + 1 + (n - m - 1) % period_.size();
}

unsigned ContinuedFraction::max_partial_quotient() const {
    unsigned best = 0;
    for (unsigned d : preperiod_) best = std::max(best, d);
    for (unsigned d : period_) best = std::max(best, d);
    return best;
}

ConvergentTable::ConvergentTable(const ContinuedFraction& cf, std::size_t max_index) {
    if (max_index > 0 && cf.length() < max_index) {
        throw InvalidArgument("finite expansion too short for convergent " + std::to_string(max_index));
    }
    rows_.reserve(max_index + 3);
    rows_.push_back({-2, 0, 1});
    rows_.push_back({-1, 1, 0});
    for (std::size_t n = 0; n <= max_index; ++n) {
        const BigInt d = cf.partial_quotient(n);
        const auto& a = rows_[rows_.size() - 1];
        const auto& b = rows_[rows_.size() - 2];
        rows_.push_back({long(n), d * a.p + b.p, d * a.q + b.q});
    }
}

const Convergent& ConvergentTable::row(long n) const {
    if (n < -2 || n > long(max_index())) throw InvalidArgument("convergent index out of range");
    return rows_[std::size_t(n + 2)];
}

ConvergentTable convergents(const ContinuedFraction& cf, std::size_t n) { return ConvergentTable(cf, n); }

Rational finite_cf_value(const std::vector<unsigned>& terms) {
    if (terms.empty()) throw InvalidArgument("empty continued fraction");
    Rational value = terms.back();
    for (std::size_t i = terms.size() - 1; i-- > 0;) value = Rational(terms[i]) + 1 / value;
    return value;
}

FiniteWord standard_word(const ContinuedFraction& cf, std::size_t n) {
    FiniteWord prev = FiniteWord::from_string("0", 2);
    if (n == 0) return prev;
    FiniteWord cur = FiniteWord::from_string("0", 2).power(cf.partial_quotient(1) - 1) + FiniteWord::from_string("1", 2);
    for (std::size_t i = 2; i <= n; ++i) {
        FiniteWord next = cur.power(cf.partial_quotient(i)) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

FiniteWord semi_standard_word(const ContinuedFraction& cf, std::size_t n, unsigned t) {
    if (n < 2) throw NotSemiStandard("semi-standard words need n >= 2");
    unsigned d = cf.partial_quotient(n);
    if (t < 1 || t >= d) {
        throw NotSemiStandard("t = " + std::to_string(t) + " outside [1, d_" + std::to_string(n) + " = " +
                              std::to_string(d) + ")");
    }
    return standard_word(cf, n - 1).power(t) + standard_word(cf, n - 2);
}

// --- QuadraticNumber ------------------------------------------------------

QuadraticNumber::QuadraticNumber(Rational a) : a_(std::move(a)) {}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, BigInt radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
    if (d_ <= 0) throw InvalidArgument("radicand must be positive");
    normalize();
}

void QuadraticNumber::normalize() {
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
}

QuadraticNumber QuadraticNumber::sqrt_of(const BigInt& n) {
    if (n <= 0) throw InvalidArgument("sqrt_of needs a positive integer");
    BigInt rest = n;
    BigInt outside = 1;
    for (BigInt f = 2; f * f <= rest; ++f) {
        while (rest % (f * f) == 0) {
            rest /= f * f;
            outside *= f;
        }
    }
    return QuadraticNumber(0, Rational(outside), rest);
}

int QuadraticNumber::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with b^2 D; equality is impossible for square-free D > 1.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(d_);
    return lhs > rhs ? sa : sb;
}

double QuadraticNumber::to_double() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
}

std::string QuadraticNumber::to_string() const {
    if (b_ == 0) return balword::to_string(a_);
    return balword::to_string(a_) + " + " + balword::to_string(b_) + "*sqrt(" + d_.str() + ")";
}

namespace {

BigInt common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.surd_part() == 0) return y.radicand();
    if (y.surd_part() == 0) return x.radicand();
    if (x.radicand() != y.radicand()) throw InvalidArgument("quadratic numbers over different fields");
    return x.radicand();
}

}  // namespace

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y)};
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y)};
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    const BigInt d = common_radicand(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
    const BigInt d = common_radicand(x, y);
    const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
    if (norm == 0) throw InvalidArgument("division by zero");
    const QuadraticNumber num = x * y.conjugate();
    return {num.a_ / norm, num.b_ / norm, d};
}

std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QuadraticNumber slope_value(const ContinuedFraction& cf) {
    const auto& pre = cf.preperiod();
    if (!cf.is_quadratic()) {
        std::vector<unsigned> terms{0};
        terms.insert(terms.end(), pre.begin(), pre.end());
        return QuadraticNumber(finite_cf_value(terms));
    }
    // Purely periodic tail beta = [a_1; a_2, ..., a_L, beta] as a Moebius fixed point.
    BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (unsigned a : cf.period()) {
        BigInt h = a * h1 + h2;
        BigInt k = a * k1 + k2;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
    }
    // beta = (h1 beta + h2) / (k1 beta + k2)  =>  k1 beta^2 + (k2 - h1) beta - h2 = 0.
    const BigInt disc = (h1 - k2) * (h1 - k2) + 4 * k1 * h2;
    const QuadraticNumber root = QuadraticNumber::sqrt_of(disc);
    const QuadraticNumber beta = (QuadraticNumber(Rational(h1 - k2)) + root) / QuadraticNumber(Rational(2 * k1));

    const ConvergentTable table(cf, pre.size());
    const long m = long(pre.size());
    const QuadraticNumber pm(Rational(table.p(m))), pm1(Rational(table.p(m - 1)));
    const QuadraticNumber qm(Rational(table.q(m))), qm1(Rational(table.q(m - 1)));
    return (pm * beta + pm1) / (qm * beta + qm1);
}

RecurrenceParams find_linear_recurrence(const ContinuedFraction& cf, std::size_t s_max, std::size_t n_check) {
    if (!cf.is_quadratic()) throw NotQuadratic("linear recurrence needs an ultimately periodic expansion");
    const std::size_t period = cf.period().size();
    if (s_max < period) throw InvalidArgument("s_max must be at least the period length");
    const std::size_t m = cf.preperiod().size();
    const std::size_t r_max = m + 2 * s_max;
    const ConvergentTable table(cf, r_max + 2 * s_max + n_check);

    auto holds = [&](std::size_t s, const BigInt& t, std::size_t n) {
        const long a = long(n), b = long(n + s), c = long(n + 2 * s);
        const int sign = (s % 2 == 0) ? 1 : -1;
        return table.q(c) - t * table.q(b) + sign * table.q(a) == 0 &&
               table.p(c) - t * table.p(b) + sign * table.p(a) == 0;
    };

    for (std::size_t s = period; s <= s_max; s += period) {
        std::optional<RecurrenceParams> best;
        for (std::size_t r = 0; r <= m + 2 * s; ++r) {
            const int sign = (s % 2 == 0) ? 1 : -1;
            const BigInt num = table.q(long(r + 2 * s)) + sign * table.q(long(r));
            const BigInt& den = table.q(long(r + s));
            if (num % den != 0) continue;
            const BigInt t = num / den;
            bool ok = true;
            for (std::size_t n = r; n <= r + n_check && ok; ++n) ok = holds(s, t, n);
            if (!ok) continue;
            if (!best || t < best->t) best = RecurrenceParams{r, s, t};
        }
        if (best) return *best;
    }
    throw NotFound("no recurrence with s <= " + std::to_string(s_max));
}

}  // namespace balword
