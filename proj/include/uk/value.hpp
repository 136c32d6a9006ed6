#pragma once

#include <string>
#include <variant>

#include "uk/rational.hpp"

namespace uk {

/// Real function value: an exact rational while every input was exact,
/// a double as soon as any floating-point operand enters.
class FuncValue {
public:
    FuncValue() : value_(Rational(0)) {}
    FuncValue(Rational r) : value_(std::move(r)) {}
    FuncValue(int i) : value_(Rational(i)) {}
    FuncValue(double d) : value_(d) {}

    bool is_exact() const { return std::holds_alternative<Rational>(value_); }
    /// Throws std::logic_error when the value is a double.
    const Rational& exact() const;
    double to_double() const;

    /// "p/q" for exact values, shortest round-trip decimal otherwise.
    std::string to_string() const;

    friend FuncValue operator+(const FuncValue& a, const FuncValue& b);
    friend FuncValue operator-(const FuncValue& a, const FuncValue& b);
    friend FuncValue operator*(const FuncValue& a, const FuncValue& b);
    friend FuncValue operator/(const FuncValue& a, const FuncValue& b);
    FuncValue operator-() const;

    FuncValue& operator+=(const FuncValue& b) { return *this = *this + b; }
    FuncValue& operator-=(const FuncValue& b) { return *this = *this - b; }
    FuncValue& operator*=(const FuncValue& b) { return *this = *this * b; }

    // Exact comparison when both sides are exact, double comparison otherwise.
    friend bool operator==(const FuncValue& a, const FuncValue& b);
    friend bool operator<(const FuncValue& a, const FuncValue& b);
    friend bool operator>(const FuncValue& a, const FuncValue& b) { return b < a; }
    friend bool operator<=(const FuncValue& a, const FuncValue& b) { return !(b < a); }
    friend bool operator>=(const FuncValue& a, const FuncValue& b) { return !(a < b); }

private:
    std::variant<Rational, double> value_;
};

FuncValue abs(const FuncValue& v);
FuncValue max(const FuncValue& a, const FuncValue& b);
FuncValue min(const FuncValue& a, const FuncValue& b);

}  // namespace uk
