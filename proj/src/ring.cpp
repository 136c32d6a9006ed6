#include "uk/ring.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace uk {

std::string_view to_string(Arithmetic mode) {
    return mode == Arithmetic::padic ? "padic" : "powerseries";
}

Arithmetic parse_arithmetic(std::string_view text) {
    if (text == "padic") return Arithmetic::padic;
    if (text == "powerseries" || text == "power_series") return Arithmetic::power_series;
    throw std::invalid_argument("unknown arithmetic mode '" + std::string(text) + "'");
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RingSpec::RingSpec(int q, Arithmetic mode) : q_(q), mode_(mode), prime_(is_prime(q)) {
    if (q < 2) throw std::invalid_argument("residue field order q must be >= 2");
    if (mode == Arithmetic::padic && !prime_)
        throw std::invalid_argument("p-adic mode requires prime q, got " + std::to_string(q));
}

void RingSpec::require_arithmetic() const {
    if (!prime_)
        throw std::invalid_argument("ring arithmetic requires prime q, got " + std::to_string(q_));
}

namespace {

void strip(std::vector<Digit>& digits) {
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
}

// Digits produced by ring operations are already in range.
Point from_raw(std::vector<Digit> digits, int q = std::numeric_limits<int>::max()) {
    return Point(std::move(digits), q);
}

void check_depth(int depth) {
    if (depth < 1) throw std::invalid_argument("working depth must be >= 1");
}

}  // namespace

Point::Point(std::vector<Digit> digits, int q) : digits_(std::move(digits)) {
    for (Digit d : digits_)
        if (d >= static_cast<Digit>(q))
            throw std::invalid_argument("digit " + std::to_string(d) + " out of range for q = " +
                                        std::to_string(q));
    strip(digits_);
}

std::optional<int> valuation(const Point& x) {
    const auto digits = x.digits();
    for (std::size_t k = 0; k < digits.size(); ++k)
        if (digits[k] != 0) return static_cast<int>(k);
    return std::nullopt;
}

Rational abs(const Point& x, const RingSpec& spec) {
    const auto v = valuation(x);
    if (!v) return Rational(0);
    return inverse_power(spec.q(), *v);
}

Point add_mod(const Point& x, const Point& y, int depth, const RingSpec& spec) {
    check_depth(depth);
    spec.require_arithmetic();
    const Digit q = static_cast<Digit>(spec.q());
    std::vector<Digit> out(static_cast<std::size_t>(depth));
    Digit carry = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        const Digit sum = x.digit(k) + y.digit(k) + carry;
        out[k] = sum % q;
        carry = spec.mode() == Arithmetic::padic ? sum / q : 0;
    }
    return from_raw(std::move(out), spec.q());
}

Point neg_mod(const Point& x, int depth, const RingSpec& spec) {
    check_depth(depth);
    spec.require_arithmetic();
    const Digit q = static_cast<Digit>(spec.q());
    std::vector<Digit> out(static_cast<std::size_t>(depth));
    if (spec.mode() == Arithmetic::power_series) {
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = (q - x.digit(k)) % q;
        return from_raw(std::move(out), spec.q());
    }
    // q^n - x: zeros until the first nonzero digit d -> q - d, then complements.
    bool seen_nonzero = false;
    for (std::size_t k = 0; k < out.size(); ++k) {
        const Digit d = x.digit(k);
        if (seen_nonzero) {
            out[k] = q - 1 - d;
        } else if (d != 0) {
            out[k] = q - d;
            seen_nonzero = true;
        }
    }
    return from_raw(std::move(out), spec.q());
}

Point sub_mod(const Point& x, const Point& y, int depth, const RingSpec& spec) {
    return add_mod(x, neg_mod(y, depth, spec), depth, spec);
}

Point shift(const Point& x, int depth) {
    std::vector<Digit> out;
    if (depth > 0 && !x.is_zero()) {
        out.assign(static_cast<std::size_t>(depth), 0);
        for (std::size_t k = 1; k < out.size(); ++k) out[k] = x.digit(k - 1);
    }
    return from_raw(std::move(out));
}

Point truncate(const Point& x, int depth) {
    const auto digits = x.digits();
    const auto keep = std::min<std::size_t>(digits.size(), static_cast<std::size_t>(std::max(depth, 0)));
    std::vector<Digit> out(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(keep));
    return from_raw(std::move(out));
}

Point uniformizer_pow(int k) {
    if (k < 0) throw std::invalid_argument("uniformizer_pow: k must be >= 0");
    std::vector<Digit> digits(static_cast<std::size_t>(k) + 1, 0);
    digits.back() = 1;
    return from_raw(std::move(digits));
}

Point geometric_point(Digit s, int depth, const RingSpec& spec) {
    check_depth(depth);
    if (s >= static_cast<Digit>(spec.q())) throw std::invalid_argument("geometric_point: digit out of range");
    // sum_k s pi^k has constant digit s in both arithmetics: in Z_q the series
    // sum s q^k converges to s/(1-q) without carries.
    return from_raw(std::vector<Digit>(static_cast<std::size_t>(depth), s), spec.q());
}

DigitOrdering::DigitOrdering(std::vector<Digit> perm) : rank_(std::move(perm)), digit_(rank_.size()) {
    if (rank_.size() < 2) throw std::invalid_argument("digit ordering needs q >= 2 entries");
    std::vector<bool> seen(rank_.size(), false);
    for (std::size_t d = 0; d < rank_.size(); ++d) {
        const Digit r = rank_[d];
        if (r >= rank_.size() || seen[r]) throw std::invalid_argument("digit ordering is not a permutation");
        seen[r] = true;
        digit_[r] = static_cast<Digit>(d);
    }
}

DigitOrdering DigitOrdering::identity(int q) {
    std::vector<Digit> perm(static_cast<std::size_t>(q));
    for (std::size_t d = 0; d < perm.size(); ++d) perm[d] = static_cast<Digit>(d);
    return DigitOrdering(std::move(perm));
}

DigitOrdering DigitOrdering::from_sequence(std::span<const Digit> sequence) {
    std::vector<Digit> perm(sequence.size(), static_cast<Digit>(sequence.size()));
    for (std::size_t r = 0; r < sequence.size(); ++r) {
        if (sequence[r] >= sequence.size()) throw std::invalid_argument("digit ordering entry out of range");
        perm[sequence[r]] = static_cast<Digit>(r);
    }
    return DigitOrdering(std::move(perm));
}

std::vector<Digit> parse_digit_list(std::string_view text, int q) {
    std::vector<Digit> digits;
    if (text.empty()) return digits;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        Digit d = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        while (first < last && *first == ' ') ++first;
        while (last > first && last[-1] == ' ') --last;
        const auto [ptr, ec] = std::from_chars(first, last, d);
        if (ec != std::errc{} || ptr != last || first == last)
            throw std::invalid_argument("malformed digit list '" + std::string(text) + "'");
        if (d >= static_cast<Digit>(q))
            throw std::invalid_argument("digit " + std::to_string(d) + " out of range for q = " + std::to_string(q));
        digits.push_back(d);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return digits;
}

Point parse_point(std::string_view text, int q) { return Point(parse_digit_list(text, q), q); }

std::string format_point(const Point& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (Digit d : x.digits()) {
        if (!out.empty()) out += ',';
        out += std::to_string(d);
    }
    return out;
}

}  // namespace uk
