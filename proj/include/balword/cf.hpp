#pragma once

#include "balword/numeric.hpp"
#include "balword/word.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace balword {

// Slope in (0,1) given as [0; preperiod, (period)]. An empty period is a
// finite (rational) expansion; everything quadratic needs a non-empty period.
class ContinuedFraction {
public:
    ContinuedFraction(std::vector<unsigned> preperiod, std::vector<unsigned> period);

    // Text form "[0;a,b,c,(p,q)]"; the period group is optional.
    static ContinuedFraction parse(std::string_view text);
    std::string to_string() const;

    const std::vector<unsigned>& preperiod() const noexcept { return preperiod_; }
    const std::vector<unsigned>& period() const noexcept { return period_; }
    bool is_quadratic() const noexcept { return !period_.empty(); }

    // d_n; d_0 = 0. Throws past the end of a finite expansion.
    unsigned partial_quotient(std::size_t n) const;
    // Number of available partial quotients d_1.. (SIZE_MAX when periodic).
    std::size_t length() const noexcept;

    // Index in [0, preperiod + period) such that equal phases imply d_n equal
    // from there on: phase(n) = n for n <= m, m + 1 + (n - m - 1) mod L else.
    std::size_t phase(std::size_t n) const;
    unsigned max_partial_quotient() const;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<unsigned> preperiod_;
    std::vector<unsigned> period_;
};

struct Convergent {
    long n;
    BigInt p;
    BigInt q;
};

// Rows n = -2 .. max_index of p_n/q_n.
class ConvergentTable {
public:
    ConvergentTable(const ContinuedFraction& cf, std::size_t max_index);

    std::size_t max_index() const noexcept { return rows_.size() - 3; }
    const BigInt& p(long n) const { return row(n).p; }
    const BigInt& q(long n) const { return row(n).q; }
    const Convergent& row(long n) const;
    const std::vector<Convergent>& rows() const noexcept { return rows_; }

private:
    std::vector<Convergent> rows_;
};

ConvergentTable convergents(const ContinuedFraction& cf, std::size_t n);

// Value of the finite expansion [a_0; a_1, ..., a_r].
Rational finite_cf_value(const std::vector<unsigned>& terms);

FiniteWord standard_word(const ContinuedFraction& cf, std::size_t n);
// s_{n,t} = s_{n-1}^t s_{n-2} for n >= 2 and 1 <= t < d_n.
FiniteWord semi_standard_word(const ContinuedFraction& cf, std::size_t n, unsigned t);

// Exact a + b*sqrt(D) with D square-free. D = 1 is folded into a.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(Rational a);  // NOLINT: rationals embed implicitly
    QuadraticNumber(Rational a, Rational b, BigInt radicand);

    // sqrt(n) for a positive integer n, reduced to s*sqrt(D).
    static QuadraticNumber sqrt_of(const BigInt& n);

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& surd_part() const noexcept { return b_; }
    const BigInt& radicand() const noexcept { return d_; }

    int sign() const;
    double to_double() const;
    std::string to_string() const;

    QuadraticNumber conjugate() const { return {a_, -b_, d_}; }

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
    QuadraticNumber operator-() const { return {-a_, -b_, d_}; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() == 0; }
    friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y);

private:
    void normalize();

    Rational a_{0};
    Rational b_{0};
    BigInt d_{1};
};

QuadraticNumber slope_value(const ContinuedFraction& cf);

// q_{n+2s} - t q_{n+s} + (-1)^s q_n = 0 for n >= r (same for p).
struct RecurrenceParams {
    std::size_t r;
    std::size_t s;
    BigInt t;
};

RecurrenceParams find_linear_recurrence(const ContinuedFraction& cf, std::size_t s_max, std::size_t n_check);

}  // namespace balword
