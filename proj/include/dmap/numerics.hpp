#pragma once

// Exact points of the circle R/Z and their base-d digit expansions.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dmap {

using BigInt = boost::multiprecision::cpp_int;
/// Unrestricted rational, used for lifts and piecewise-linear maps where
/// values leave [0,1).
using Fraction = boost::multiprecision::cpp_rational;

inline constexpr int kMaxBase = 256;

/// Throws Errc::invalid_base unless 2 <= d <= kMaxBase.
void check_base(int d);

BigInt ipow(int base, std::size_t exponent);

/// A point of the circle: num/den in lowest terms with 0 <= num < den.
/// Construction reduces mod 1, so 1 and any integer map to 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den);

    /// Parses "num/den" or a bare integer.
    static Rational parse(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    Fraction to_fraction() const { return Fraction(num_, den_); }
    double to_double() const;
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    BigInt num_;
    BigInt den_;
};

std::string to_string(const Rational& x);
Rational from_fraction(const Fraction& value);

/// x -> d*x (mod 1).
Rational dmap_step(const Rational& x, int d);

/// First base-d digit of x, i.e. floor(d*x).
int leading_digit(const Rational& x, int d);

/// Finite word over {0, ..., base-1}.
struct DigitWord {
    int base = 2;
    std::vector<std::uint8_t> digits;

    std::size_t size() const noexcept { return digits.size(); }
    bool empty() const noexcept { return digits.empty(); }
    std::span<const std::uint8_t> view() const noexcept { return digits; }

    friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

/// Validates base and every digit.
DigitWord make_word(int base, std::vector<std::uint8_t> digits);

/// Digit characters for base <= 10, comma-separated integers otherwise.
DigitWord parse_word(std::string_view text, int base);
std::string to_string(const DigitWord& word);

/// True iff the word has no proper period (no k < n with w[i] = w[(i+k) mod n]).
bool is_primitive(std::span<const std::uint8_t> digits);
DigitWord rotate_left(const DigitWord& word, std::size_t k);
/// Lexicographically least rotation.
DigitWord least_rotation(const DigitWord& word);

/// Base-d integer value of the digit string.
BigInt word_integer(std::span<const std::uint8_t> digits, int base);

/// (0.\overline{w})_d, reduced; the all-(d-1) word yields 0.
Rational value_of_periodic(const DigitWord& word);

/// (0.pre\overline{per})_d; an empty period denotes a terminating expansion.
Rational value_of_eventually_periodic(const DigitWord& preperiod, const DigitWord& period);

/// First len digits of the terminating-preferred expansion of x.
DigitWord expansion(const Rational& x, int d, std::size_t len);

struct EventualPeriod {
    DigitWord preperiod;
    DigitWord period;
};

/// Minimal preperiod and period with x = (0.pre\overline{per})_d.
EventualPeriod eventually_periodic_decompose(const Rational& x, int d);

}  // namespace dmap
