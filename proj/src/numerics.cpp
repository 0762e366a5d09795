#include "dmap/numerics.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "dmap/error.hpp"

namespace dmap {

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw Error(Errc::invalid_input, "not a non-negative integer: '" + std::string(text) + "'");
    return BigInt(std::string(text));
}

}  // namespace

void check_base(int d) {
    if (d < 2 || d > kMaxBase)
        throw Error(Errc::invalid_base, "base must lie in [2, " + std::to_string(kMaxBase) + "], got " + std::to_string(d));
}

BigInt ipow(int base, std::size_t exponent) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

Rational::Rational(BigInt num, BigInt den) {
    if (den <= 0) throw Error(Errc::invalid_input, "denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    const BigInt g = boost::multiprecision::gcd(num, den);
    if (num.is_zero()) {
        num_ = 0;
        den_ = 1;
    } else {
        num_ = num / g;
        den_ = den / g;
    }
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text), 1);
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den.is_zero()) throw Error(Errc::invalid_input, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), std::move(den));
}

double Rational::to_double() const {
    return static_cast<double>(to_fraction());
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

std::string to_string(const Rational& x) { return x.str(); }

Rational from_fraction(const Fraction& value) {
    return Rational(boost::multiprecision::numerator(value), boost::multiprecision::denominator(value));
}

Rational dmap_step(const Rational& x, int d) {
    check_base(d);
    return Rational(x.num() * d, x.den());
}

int leading_digit(const Rational& x, int d) {
    return static_cast<int>(BigInt(x.num() * d / x.den()));
}

DigitWord make_word(int base, std::vector<std::uint8_t> digits) {
    check_base(base);
    for (auto digit : digits) {
        if (digit >= base)
            throw Error(Errc::invalid_digit,
                        "digit " + std::to_string(digit) + " out of range for base " + std::to_string(base));
    }
    return DigitWord{base, std::move(digits)};
}

DigitWord parse_word(std::string_view text, int base) {
    check_base(base);
    std::vector<std::uint8_t> digits;
    if (base <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9') throw Error(Errc::invalid_digit, "bad digit character '" + std::string(1, c) + "'");
            const int digit = c - '0';
            if (digit >= base) throw Error(Errc::invalid_digit, "digit " + std::to_string(digit) + " >= base");
            digits.push_back(static_cast<std::uint8_t>(digit));
        }
        return DigitWord{base, std::move(digits)};
    }
    if (text.empty()) return DigitWord{base, {}};
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int digit = -1;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), digit);
        if (ec != std::errc{} || end != token.data() + token.size() || digit < 0 || digit >= base)
            throw Error(Errc::invalid_digit, "bad digit '" + std::string(token) + "' for base " + std::to_string(base));
        digits.push_back(static_cast<std::uint8_t>(digit));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return DigitWord{base, std::move(digits)};
}

std::string to_string(const DigitWord& word) {
    std::string out;
    for (std::size_t i = 0; i < word.digits.size(); ++i) {
        if (word.base <= 10) {
            out.push_back(static_cast<char>('0' + word.digits[i]));
        } else {
            if (i) out.push_back(',');
            out += std::to_string(word.digits[i]);
        }
    }
    return out;
}

bool is_primitive(std::span<const std::uint8_t> digits) {
    const std::size_t n = digits.size();
    if (n == 0) return false;
    for (std::size_t k = 1; k < n; ++k) {
        if (n % k != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + k < n && periodic; ++i) periodic = digits[i] == digits[i + k];
        if (periodic) return false;
    }
    return true;
}

DigitWord rotate_left(const DigitWord& word, std::size_t k) {
    DigitWord out = word;
    if (!out.digits.empty())
        std::rotate(out.digits.begin(), out.digits.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.digits.end());
    return out;
}

DigitWord least_rotation(const DigitWord& word) {
    DigitWord best = word;
    for (std::size_t k = 1; k < word.size(); ++k) {
        DigitWord candidate = rotate_left(word, k);
        if (candidate.digits < best.digits) best = std::move(candidate);
    }
    return best;
}

BigInt word_integer(std::span<const std::uint8_t> digits, int base) {
    BigInt value = 0;
    for (auto digit : digits) value = value * base + digit;
    return value;
}

Rational value_of_periodic(const DigitWord& word) {
    check_base(word.base);
    if (word.empty()) throw Error(Errc::invalid_input, "periodic word must be nonempty");
    return Rational(word_integer(word.digits, word.base), ipow(word.base, word.size()) - 1);
}

Rational value_of_eventually_periodic(const DigitWord& preperiod, const DigitWord& period) {
    const int d = preperiod.empty() ? period.base : preperiod.base;
    check_base(d);
    if (!period.empty() && !preperiod.empty() && period.base != preperiod.base)
        throw Error(Errc::invalid_input, "preperiod and period bases differ");
    const BigInt shift = ipow(d, preperiod.size());
    if (period.empty()) return Rational(word_integer(preperiod.digits, d), shift);
    const BigInt cycle_den = ipow(d, period.size()) - 1;
    return Rational(word_integer(preperiod.digits, d) * cycle_den + word_integer(period.digits, d), shift * cycle_den);
}

DigitWord expansion(const Rational& x, int d, std::size_t len) {
    check_base(d);
    DigitWord out{d, {}};
    out.digits.reserve(len);
    BigInt rem = x.num();
    for (std::size_t i = 0; i < len; ++i) {
        rem *= d;
        const BigInt digit = rem / x.den();
        rem -= digit * x.den();
        out.digits.push_back(static_cast<std::uint8_t>(digit));
    }
    return out;
}

EventualPeriod eventually_periodic_decompose(const Rational& x, int d) {
    check_base(d);
    std::map<Rational, std::size_t> seen;
    std::vector<std::uint8_t> digits;
    Rational current = x;
    while (true) {
        const auto [it, inserted] = seen.emplace(current, digits.size());
        if (!inserted) {
            const std::size_t start = it->second;
            EventualPeriod out{{d, {}}, {d, {}}};
            out.preperiod.digits.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
            out.period.digits.assign(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
            return out;
        }
        digits.push_back(static_cast<std::uint8_t>(leading_digit(current, d)));
        current = dmap_step(current, d);
    }
}

}  // namespace dmap
