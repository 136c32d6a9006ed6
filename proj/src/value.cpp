#include "uk/value.hpp"

#include <charconv>
#include <stdexcept>

namespace uk {

const Rational& FuncValue::exact() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return *r;
    throw std::logic_error("FuncValue holds a double, not an exact rational");
}

double FuncValue::to_double() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return uk::to_double(*r);
    return std::get<double>(value_);
}

std::string FuncValue::to_string() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return uk::to_string(*r);
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
    return std::string(buf, res.ptr);
}

namespace {

template <typename Op>
FuncValue combine(const FuncValue& a, const FuncValue& b, Op op) {
    if (a.is_exact() && b.is_exact()) return FuncValue(Rational(op(a.exact(), b.exact())));
    return FuncValue(op(a.to_double(), b.to_double()));
}

}  // namespace

FuncValue operator+(const FuncValue& a, const FuncValue& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

FuncValue operator-(const FuncValue& a, const FuncValue& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

FuncValue operator*(const FuncValue& a, const FuncValue& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

FuncValue operator/(const FuncValue& a, const FuncValue& b) {
    if (b.is_exact() && b.exact() == 0) throw std::domain_error("FuncValue division by zero");
    return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

FuncValue FuncValue::operator-() const {
    if (is_exact()) return FuncValue(Rational(-exact()));
    return FuncValue(-to_double());
}

bool operator==(const FuncValue& a, const FuncValue& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    return a.to_double() == b.to_double();
}

bool operator<(const FuncValue& a, const FuncValue& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
    return a.to_double() < b.to_double();
}

FuncValue abs(const FuncValue& v) { return v < FuncValue(0) ? -v : v; }
FuncValue max(const FuncValue& a, const FuncValue& b) { return a < b ? b : a; }
FuncValue min(const FuncValue& a, const FuncValue& b) { return b < a ? b : a; }

}  // namespace uk
