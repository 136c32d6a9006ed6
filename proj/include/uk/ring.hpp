#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uk/rational.hpp"

namespace uk {

using Digit = std::uint32_t;

enum class Arithmetic {
    padic,         // base-q carries: O = Z_q, q prime
    power_series,  // digitwise mod q: O = F_q[[T]]
};

std::string_view to_string(Arithmetic mode);
Arithmetic parse_arithmetic(std::string_view text);

bool is_prime(int n);

/// The ambient ring: residue field order q and the arithmetic of digit strings.
///
/// Digits are the coset representatives {0, 1, ..., q-1}. A composite q is
/// accepted in power-series mode for tree-only computations; ring arithmetic
/// on such a spec throws.
class RingSpec {
public:
    RingSpec(int q, Arithmetic mode);

    int q() const { return q_; }
    Arithmetic mode() const { return mode_; }
    bool prime_residue() const { return prime_; }

    /// Throws unless digit arithmetic is a genuine ring operation.
    void require_arithmetic() const;

    bool operator==(const RingSpec&) const = default;

private:
    int q_;
    Arithmetic mode_;
    bool prime_;
};

/// Element of O as a finite digit string x = sum digits[k] pi^k.
///
/// Trailing zeros are stripped, so equality of Points is equality in O.
class Point {
public:
    Point() = default;
    /// Validates every digit against q and canonicalizes.
    Point(std::vector<Digit> digits, int q);

    static Point zero() { return {}; }

    std::span<const Digit> digits() const { return digits_; }
    /// Digit k, with the implied trailing zeros.
    Digit digit(std::size_t k) const { return k < digits_.size() ? digits_[k] : 0; }
    std::size_t length() const { return digits_.size(); }
    bool is_zero() const { return digits_.empty(); }

    auto operator<=>(const Point&) const = default;

private:
    std::vector<Digit> digits_;
};

/// Index of the first nonzero digit; nullopt stands for v(0) = infinity.
std::optional<int> valuation(const Point& x);

/// |x| = q^{-v(x)}, 0 for the zero point.
Rational abs(const Point& x, const RingSpec& spec);

Point add_mod(const Point& x, const Point& y, int depth, const RingSpec& spec);
Point neg_mod(const Point& x, int depth, const RingSpec& spec);
Point sub_mod(const Point& x, const Point& y, int depth, const RingSpec& spec);

/// Multiplication by pi truncated mod pi^depth (a digit shift).
Point shift(const Point& x, int depth);

/// x mod pi^depth.
Point truncate(const Point& x, int depth);

Point uniformizer_pow(int k);

/// Truncation of s/(1 - pi) to depth n.
Point geometric_point(Digit s, int depth, const RingSpec& spec);

/// Permutation of the digits: rank(d) is the position of digit d in the order
/// s_0 < s_1 < ... < s_{q-1}.
class DigitOrdering {
public:
    /// perm[d] = rank of digit d; must be a bijection on [0, q).
    explicit DigitOrdering(std::vector<Digit> perm);

    static DigitOrdering identity(int q);
    /// Builds the ordering from the listed sequence s_0, ..., s_{q-1}.
    static DigitOrdering from_sequence(std::span<const Digit> sequence);

    int q() const { return static_cast<int>(rank_.size()); }
    Digit rank(Digit d) const { return rank_.at(d); }
    /// s_i.
    Digit digit_at(Digit rank) const { return digit_.at(rank); }
    std::span<const Digit> perm() const { return rank_; }

    bool operator==(const DigitOrdering&) const = default;

private:
    std::vector<Digit> rank_;
    std::vector<Digit> digit_;
};

/// Comma-separated digits, least significant first: "1,0,2" = 1 + 2 pi^2.
/// The empty string and "0" both denote zero.
Point parse_point(std::string_view text, int q);
std::string format_point(const Point& x);

/// Parses a comma-separated digit list without canonicalizing.
std::vector<Digit> parse_digit_list(std::string_view text, int q);

}  // namespace uk
