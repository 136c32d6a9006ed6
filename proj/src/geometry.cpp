#include "uk/geometry.hpp"

#include <stdexcept>

namespace uk {

std::uint64_t checked_power(int q, int k) {
    if (k < 0) throw std::invalid_argument("checked_power: negative exponent");
    std::uint64_t out = 1;
    for (int i = 0; i < k; ++i) {
        if (out > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(q))
            throw std::overflow_error("q^k exceeds the 64-bit index range");
        out *= static_cast<std::uint64_t>(q);
    }
    return out;
}

Disc::Disc(int q) : q_(q) {
    if (q < 2) throw std::invalid_argument("disc: q must be >= 2");
}

Disc::Disc(std::vector<Digit> prefix, int q) : q_(q), prefix_(std::move(prefix)) {
    if (q < 2) throw std::invalid_argument("disc: q must be >= 2");
    for (Digit d : prefix_)
        if (d >= static_cast<Digit>(q)) throw std::invalid_argument("disc prefix digit out of range");
}

Disc Disc::around(const Point& center, int depth, int q) {
    if (depth < 0) throw std::invalid_argument("disc depth must be >= 0");
    std::vector<Digit> prefix(static_cast<std::size_t>(depth));
    for (std::size_t k = 0; k < prefix.size(); ++k) prefix[k] = center.digit(k);
    return Disc(std::move(prefix), q);
}

Point Disc::center() const { return Point(prefix_, q_); }

bool Disc::contains(const Point& x) const {
    for (std::size_t k = 0; k < prefix_.size(); ++k)
        if (x.digit(k) != prefix_[k]) return false;
    return true;
}

bool Disc::contains(const Disc& other) const {
    if (other.depth() < depth()) return false;
    for (std::size_t k = 0; k < prefix_.size(); ++k)
        if (other.prefix_[k] != prefix_[k]) return false;
    return true;
}

Disc Disc::child(Digit d) const {
    auto prefix = prefix_;
    prefix.push_back(d);
    return Disc(std::move(prefix), q_);
}

std::vector<Disc> Disc::children() const {
    std::vector<Disc> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (Digit d = 0; d < static_cast<Digit>(q_); ++d) out.push_back(child(d));
    return out;
}

Disc Disc::parent() const {
    if (is_root()) throw std::invalid_argument("the root disc has no parent");
    return Disc(std::vector<Digit>(prefix_.begin(), prefix_.end() - 1), q_);
}

Disc smallest_disc_containing(const Point& x, const Point& y, int q) {
    if (x == y) throw std::invalid_argument("smallest_disc_containing: points must differ");
    std::vector<Digit> prefix;
    for (std::size_t k = 0;; ++k) {
        if (x.digit(k) != y.digit(k)) break;
        prefix.push_back(x.digit(k));
    }
    return Disc(std::move(prefix), q);
}

std::uint64_t beer_index(const Disc& disc, const DigitOrdering& ordering) {
    if (ordering.q() != disc.q()) throw std::invalid_argument("beer_index: ordering has the wrong q");
    // Fails early if q^depth does not fit.
    (void)checked_power(disc.q(), disc.depth());
    std::uint64_t index = 0;
    for (Digit a : disc.prefix()) index = index * static_cast<std::uint64_t>(disc.q()) + ordering.rank(a);
    return index;
}

Disc disc_at_beer_index(std::uint64_t index, int depth, const DigitOrdering& ordering) {
    const int q = ordering.q();
    if (index >= checked_power(q, depth)) throw std::invalid_argument("beer index out of range");
    std::vector<Digit> prefix(static_cast<std::size_t>(depth));
    for (int j = depth - 1; j >= 0; --j) {
        prefix[static_cast<std::size_t>(j)] = ordering.digit_at(static_cast<Digit>(index % static_cast<std::uint64_t>(q)));
        index /= static_cast<std::uint64_t>(q);
    }
    return Disc(std::move(prefix), q);
}

std::vector<Disc> discs_at_depth(int depth, int q) {
    const auto count = checked_power(q, depth);
    const auto identity = DigitOrdering::identity(q);
    std::vector<Disc> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(disc_at_beer_index(i, depth, identity));
    return out;
}

Disc parse_disc(std::string_view text, int q) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("malformed disc '" + std::string(text) + "'");
    const std::string depth_text(text.substr(0, colon));
    std::size_t used = 0;
    int depth = -1;
    try {
        depth = std::stoi(depth_text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != depth_text.size() || depth < 0)
        throw std::invalid_argument("malformed disc depth in '" + std::string(text) + "'");
    auto prefix = parse_digit_list(text.substr(colon + 1), q);
    if (static_cast<int>(prefix.size()) != depth)
        throw std::invalid_argument("disc '" + std::string(text) + "' lists " + std::to_string(prefix.size()) +
                                    " digits for depth " + std::to_string(depth));
    return Disc(std::move(prefix), q);
}

std::string format_disc(const Disc& disc) {
    std::string out = std::to_string(disc.depth()) + ":";
    for (std::size_t k = 0; k < disc.prefix().size(); ++k) {
        if (k) out += ',';
        out += std::to_string(disc.prefix()[k]);
    }
    return out;
}

}  // namespace uk
