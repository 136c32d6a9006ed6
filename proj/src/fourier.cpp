#include "uk/fourier.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "uk/geometry.hpp"

namespace uk {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

CharacterGroup::CharacterGroup(const RingSpec& spec, int n) : spec_(spec), n_(n) {
    if (!is_prime(spec.q()))
        throw std::invalid_argument("characters need prime q, got q = " + std::to_string(spec.q()));
    if (n < 0) throw std::invalid_argument("character group depth must be >= 0");
    size_ = checked_power(spec.q(), n);
    const std::uint64_t order = spec.mode() == Arithmetic::padic ? size_ : static_cast<std::uint64_t>(spec.q());
    roots_.resize(order);
    for (std::uint64_t k = 0; k < order; ++k)
        roots_[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order));
}

int CharacterGroup::level(std::uint64_t code) const {
    if (code == 0) return 0;
    const auto q = static_cast<std::uint64_t>(spec_.q());
    int digits = 0;
    if (spec_.mode() == Arithmetic::padic) {
        while (code % q == 0) {
            code /= q;
            ++digits;
        }
        return n_ - digits;
    }
    while (code != 0) {
        code /= q;
        ++digits;
    }
    return digits;
}

std::uint64_t CharacterGroup::count_up_to_level(int L) const {
    if (L < 0 || L > n_) throw std::invalid_argument("character level out of range");
    return checked_power(spec_.q(), L);
}

std::vector<std::uint64_t> CharacterGroup::codes_up_to_level(int L) const {
    const auto count = count_up_to_level(L);
    const std::uint64_t step = spec_.mode() == Arithmetic::padic ? checked_power(spec_.q(), n_ - L) : 1;
    std::vector<std::uint64_t> codes(count);
    for (std::uint64_t k = 0; k < count; ++k) codes[k] = k * step;
    return codes;
}

std::uint64_t CharacterGroup::residue(const Point& x) const {
    std::uint64_t value = 0;
    for (int j = n_ - 1; j >= 0; --j) {
        const Digit d = x.digit(static_cast<std::size_t>(j));
        if (d >= static_cast<Digit>(spec_.q())) throw std::invalid_argument("point digit out of range for q");
        value = value * static_cast<std::uint64_t>(spec_.q()) + d;
    }
    return value;
}

Point CharacterGroup::point_of_residue(std::uint64_t xbar) const {
    std::vector<Digit> digits(static_cast<std::size_t>(n_));
    for (auto& d : digits) {
        d = static_cast<Digit>(xbar % static_cast<std::uint64_t>(spec_.q()));
        xbar /= static_cast<std::uint64_t>(spec_.q());
    }
    return Point(std::move(digits), spec_.q());
}

Complex CharacterGroup::eval_residue(std::uint64_t code, std::uint64_t xbar) const {
    if (spec_.mode() == Arithmetic::padic) return roots_[mulmod(code, xbar, size_)];
    const auto q = static_cast<std::uint64_t>(spec_.q());
    std::uint64_t phase = 0;
    for (int j = 0; j < n_ && code != 0; ++j) {
        phase += (code % q) * (xbar % q);
        code /= q;
        xbar /= q;
    }
    return roots_[phase % q];
}

std::uint64_t CharacterGroup::conjugate(std::uint64_t code) const {
    if (spec_.mode() == Arithmetic::padic) return (size_ - code) % size_;
    const auto q = static_cast<std::uint64_t>(spec_.q());
    std::uint64_t result = 0;
    std::uint64_t place = 1;
    for (int j = 0; j < n_; ++j) {
        result += ((q - code % q) % q) * place;
        code /= q;
        place *= q;
    }
    return result;
}

namespace {

// Unnormalized sums F(m) = sum over the q^d points y of the subtree of
// f(y) conj(gamma_m(y)), for the q^d characters of the subtree's depth.
std::vector<Complex> subtree_transform(const LCFunction& f, const LCFunction::Node& node, int d,
                                       const CharacterGroup& group) {
    const auto size = checked_power(f.q(), d);
    std::vector<Complex> out(size);
    if (node.is_leaf()) {
        out[0] = node.mean.to_double() * static_cast<double>(size);
        return out;
    }
    const auto q = static_cast<std::uint64_t>(f.q());
    const auto sub = size / q;
    std::vector<std::vector<Complex>> parts;
    parts.reserve(q);
    for (Digit a = 0; a < static_cast<Digit>(q); ++a) parts.push_back(subtree_transform(f, f.child(node, a), d - 1, group));

    if (f.spec().mode() == Arithmetic::padic) {
        // y = a + q y', so gamma_m(y) = w_d^{m a} * gamma_{m mod q^{d-1}}(y').
        const auto stretch = group.size() / size;
        for (std::uint64_t m = 0; m < size; ++m) {
            Complex sum = parts[0][m % sub];
            for (std::uint64_t a = 1; a < q; ++a)
                sum += std::conj(group.root((m * a % size) * stretch)) * parts[a][m % sub];
            out[m] = sum;
        }
    } else {
        // Code m = m_0 + q m'; gamma_m(y) = w^{m_0 a} * gamma_{m'}(y').
        for (std::uint64_t m = 0; m < size; ++m) {
            const auto low = m % q;
            const auto rest = m / q;
            Complex sum = parts[0][rest];
            for (std::uint64_t a = 1; a < q; ++a) sum += std::conj(group.root(low * a % q)) * parts[a][rest];
            out[m] = sum;
        }
    }
    return out;
}

}  // namespace

FourierTable fourier_coefficients(const LCFunction& f) { return fourier_coefficients(f, f.level()); }

FourierTable fourier_coefficients(const LCFunction& f, int depth) {
    if (depth < f.level()) throw std::invalid_argument("Fourier depth below the function level");
    CharacterGroup group(f.spec(), depth);
    auto values = subtree_transform(f, f.root(), depth, group);
    const double scale = 1.0 / static_cast<double>(group.size());
    for (auto& v : values) v *= scale;
    return FourierTable{std::move(group), std::move(values)};
}

double fourier_variation(const FourierTable& table) {
    double total = 0.0;
    for (std::uint64_t m = 1; m < table.group.size(); ++m)
        total += std::pow(static_cast<double>(table.group.q()), table.group.level(m)) * std::abs(table[m]);
    return total;
}

double fourier_variation(const LCFunction& f) { return fourier_variation(fourier_coefficients(f)); }

double dirichlet_kernel(const CharacterGroup& group, int L, const Point& x) {
    const auto xbar = group.residue(x);
    Complex sum = 0.0;
    for (const auto m : group.codes_up_to_level(L)) sum += group.eval_residue(m, xbar);
    return sum.real();
}

double partial_fourier_sum(const FourierTable& table, int L, const Point& x) {
    const auto xbar = table.group.residue(x);
    Complex sum = 0.0;
    for (const auto m : table.group.codes_up_to_level(L)) sum += table[m] * table.group.eval_residue(m, xbar);
    return sum.real();
}

void write_fourier_csv(std::ostream& out, const FourierTable& table) {
    // Rounding residue below 1e-14 prints as 0.
    const auto tidy = [](double v) { return std::abs(v) < 1e-14 ? 0.0 : round12(v); };
    out << "index,level,re,im,abs\n";
    char line[160];
    for (std::uint64_t m = 0; m < table.group.size(); ++m) {
        const auto& c = table[m];
        std::snprintf(line, sizeof line, "%llu,%d,%.12g,%.12g,%.12g\n", static_cast<unsigned long long>(m),
                      table.group.level(m), tidy(c.real()), tidy(c.imag()), tidy(std::abs(c)));
        out << line;
    }
}

}  // namespace uk
