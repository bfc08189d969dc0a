#include "balword/ostrowski.hpp"

#include "balword/errors.hpp"

#include <cctype>
#include <limits>

namespace balword {

OstrowskiRep OstrowskiRep::canonical() const {
    std::vector<unsigned> d = digits_;
    while (!d.empty() && d.back() == 0) d.pop_back();
    return OstrowskiRep(std::move(d));
}

OstrowskiRep OstrowskiRep::padded(std::size_t width) const {
    std::vector<unsigned> d = digits_;
    if (d.size() < width) d.resize(width, 0);
    return OstrowskiRep(std::move(d));
}

Letter letter_from_digits(const OstrowskiRep& rep) {
    std::size_t zeros = 0;
    while (zeros < rep.size() && rep.digit(zeros) == 0) ++zeros;
    if (zeros == rep.size()) throw InvalidArgument("the representation of 0 has no letter");
    return Letter(zeros % 2);
}

OstrowskiSystem::OstrowskiSystem(ContinuedFraction cf) : cf_(std::move(cf)) {
    // q_{-1} = 0, q_0 = 1; stop before overflowing 64 bits or leaving a finite expansion.
    std::uint64_t prev = 0, cur = 1;
    q64_.push_back(cur);
    for (std::size_t i = 1; i <= cf_.length(); ++i) {
        const unsigned __int128 next = (unsigned __int128)cf_.partial_quotient(i) * cur + prev;
        if (next > std::numeric_limits<std::uint64_t>::max()) break;
        prev = cur;
        cur = std::uint64_t(next);
        q64_.push_back(cur);
    }
}

OstrowskiRep OstrowskiSystem::encode(std::uint64_t n) const {
    if (n == 0) return {};
    std::size_t top = q64_.size();
    while (top > 0 && q64_[top - 1] > n) --top;
    // q64_ stops before the first weight above 2^64 - 1, so it covers every n here.
    std::vector<unsigned> digits(top, 0);
    std::uint64_t rest = n;
    for (std::size_t i = top; i-- > 0;) {
        digits[i] = unsigned(rest / q64_[i]);
        rest %= q64_[i];
    }
    if (rest != 0) throw InvalidArgument("finite slope cannot represent " + std::to_string(n));
    OstrowskiRep rep(std::move(digits));
    check_legal(rep);
    return rep.canonical();
}

OstrowskiRep OstrowskiSystem::encode(const BigInt& n) const {
    if (n < 0) throw InvalidArgument("Ostrowski representation needs N >= 0");
    if (n <= std::numeric_limits<std::uint64_t>::max() && q64_.size() > 1 &&
        n < BigInt(q64_.back())) {
        return encode(n.convert_to<std::uint64_t>());
    }
    if (n == 0) return {};
    std::vector<BigInt> weights{1};
    BigInt prev = 0;
    while (weights.back() <= n) {
        const std::size_t i = weights.size();
        if (i > cf_.length()) break;
        BigInt next = cf_.partial_quotient(i) * weights.back() + prev;
        prev = weights.back();
        weights.push_back(std::move(next));
    }
    std::size_t top = weights.size();
    while (top > 0 && weights[top - 1] > n) --top;
    std::vector<unsigned> digits(top, 0);
    BigInt rest = n;
    for (std::size_t i = top; i-- > 0;) {
        digits[i] = (rest / weights[i]).convert_to<unsigned>();
        rest %= weights[i];
    }
    if (rest != 0) throw InvalidArgument("finite slope cannot represent " + n.str());
    OstrowskiRep rep(std::move(digits));
    check_legal(rep);
    return rep.canonical();
}

void OstrowskiSystem::check_legal(const OstrowskiRep& rep) const {
    if (!is_valid(rep)) throw std::logic_error("greedy Ostrowski encoding produced an illegal representation");
}

bool OstrowskiSystem::is_valid(const OstrowskiRep& rep) const {
    const auto& b = rep.digits();
    std::size_t last = b.size();
    while (last > 0 && b[last - 1] == 0) --last;
    if (last > 0 && last - 1 + 1 > cf_.length()) return false;
    for (std::size_t i = 0; i < last; ++i) {
        const unsigned bound = cf_.partial_quotient(i + 1);
        if (i == 0) {
            if (b[0] >= bound) return false;
        } else {
            if (b[i] > bound) return false;
            if (b[i] == bound && b[i - 1] != 0) return false;
        }
    }
    return true;
}

BigInt OstrowskiSystem::decode(const OstrowskiRep& rep) const {
    if (!is_valid(rep)) throw IllegalRep("illegal Ostrowski representation " + format(rep));
    const auto& b = rep.digits();
    BigInt total = 0;
    BigInt prev = 0, cur = 1;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i > 0) {
            BigInt next = cf_.partial_quotient(i) * cur + prev;
            prev = cur;
            cur = std::move(next);
        }
        total += b[i] * cur;
    }
    return total;
}

std::uint64_t OstrowskiSystem::decode_u64(const OstrowskiRep& rep) const {
    if (!is_valid(rep)) throw IllegalRep("illegal Ostrowski representation " + format(rep));
    const auto& b = rep.digits();
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == 0) continue;
        if (i >= q64_.size()) throw InvalidArgument("value does not fit in 64 bits");
        total += std::uint64_t(b[i]) * q64_[i];
    }
    return total;
}

Letter OstrowskiSystem::letter_at(std::uint64_t n, IndexBase base) const {
    if (base == IndexBase::zero) ++n;
    if (n == 0) throw InvalidArgument("one-based positions start at 1");
    return letter_from_digits(encode(n));
}

Letter OstrowskiSystem::letter_at(const BigInt& n, IndexBase base) const {
    BigInt pos = base == IndexBase::zero ? BigInt(n + 1) : n;
    if (pos <= 0) throw InvalidArgument("one-based positions start at 1");
    return letter_from_digits(encode(pos));
}

std::vector<PrefixFactor> OstrowskiSystem::prefix_factorization(std::uint64_t n) const {
    if (n == 0) throw InvalidArgument("prefix factorization needs N >= 1");
    const OstrowskiRep rep = encode(n);
    std::vector<PrefixFactor> out;
    for (std::size_t j = rep.size(); j-- > 0;) {
        if (rep.digit(j) != 0) out.push_back({j, rep.digit(j)});
    }
    return out;
}

std::string OstrowskiSystem::format(const OstrowskiRep& rep) const {
    const bool compact = cf_.max_partial_quotient() <= 9;
    std::string out;
    const auto msd = rep.msd_digits();
    for (std::size_t i = 0; i < msd.size(); ++i) {
        if (!compact && i) out += ',';
        out += std::to_string(msd[i]);
    }
    return out.empty() ? "0" : out;
}

OstrowskiRep OstrowskiSystem::parse(std::string_view msd_text) const {
    if (msd_text.empty()) throw ParseError("empty digit string");
    std::vector<unsigned> msd;
    if (msd_text.find(',') != std::string_view::npos) {
        std::size_t i = 0;
        while (i <= msd_text.size()) {
            std::size_t j = msd_text.find(',', i);
            if (j == std::string_view::npos) j = msd_text.size();
            std::string_view item = msd_text.substr(i, j - i);
            if (item.empty()) throw ParseError("empty digit");
            unsigned v = 0;
            for (char c : item) {
                if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad digit");
                v = v * 10 + unsigned(c - '0');
            }
            msd.push_back(v);
            i = j + 1;
        }
    } else {
        for (char c : msd_text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad digit");
            msd.push_back(unsigned(c - '0'));
        }
    }
    OstrowskiRep rep(std::vector<unsigned>(msd.rbegin(), msd.rend()));
    if (!is_valid(rep)) throw IllegalRep("illegal Ostrowski representation " + std::string(msd_text));
    return rep;
}

OstrowskiRep encode(const BigInt& n, const ContinuedFraction& cf) { return OstrowskiSystem(cf).encode(n); }
BigInt decode(const OstrowskiRep& rep, const ContinuedFraction& cf) { return OstrowskiSystem(cf).decode(rep); }
bool is_valid(const OstrowskiRep& rep, const ContinuedFraction& cf) { return OstrowskiSystem(cf).is_valid(rep); }
Letter letter_at(const ContinuedFraction& cf, const BigInt& n, IndexBase base) {
    return OstrowskiSystem(cf).letter_at(n, base);
}
std::vector<PrefixFactor> prefix_factorization(const ContinuedFraction& cf, std::uint64_t n) {
    return OstrowskiSystem(cf).prefix_factorization(n);
}

}  // namespace balword
