#include "uk/rational.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace uk {

BigInt int_power(int q, int k) {
    if (k < 0) throw std::invalid_argument("int_power: negative exponent");
    return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
}

Rational inverse_power(int q, int k) {
    if (k >= 0) return Rational(BigInt(1), int_power(q, k));
    return Rational(int_power(q, -k));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(BigInt(text.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

}  // namespace uk
