#include "uk/discrepancy.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

namespace uk {

PointSet::PointSet(int q, std::vector<Point> points) : q_(q), points_(std::move(points)) {
    if (q < 2) throw std::invalid_argument("point set: q must be >= 2");
    if (points_.empty()) throw std::invalid_argument("point set must not be empty");
    for (const auto& x : points_) {
        for (Digit d : x.digits())
            if (d >= static_cast<Digit>(q)) throw std::invalid_argument("point digit out of range for q");
        max_depth_ = std::max(max_depth_, static_cast<int>(x.length()));
    }

    nodes_.push_back(TrieNode{0, 0});
    children_.assign(static_cast<std::size_t>(q), kEmpty);
    for (const auto& x : points_) {
        std::uint32_t node = 0;
        ++nodes_[node].count;
        for (int k = 0; k < max_depth_; ++k) {
            const auto slot = node * static_cast<std::size_t>(q) + x.digit(static_cast<std::size_t>(k));
            if (children_[slot] == kEmpty) {
                children_[slot] = static_cast<std::uint32_t>(nodes_.size());
                nodes_.push_back(TrieNode{0, k + 1});
                children_.resize(children_.size() + static_cast<std::size_t>(q), kEmpty);
            }
            node = children_[slot];
            ++nodes_[node].count;
        }
    }
}

std::uint64_t PointSet::counts_in(const Disc& disc) const {
    if (disc.q() != q_) throw std::invalid_argument("disc and point set disagree on q");
    std::uint32_t node = 0;
    const auto prefix = disc.prefix();
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        if (static_cast<int>(k) >= max_depth_) {
            // Beyond max_depth every point continues with zeros.
            if (prefix[k] != 0) return 0;
            continue;
        }
        node = trie_child(node, prefix[k]);
        if (node == kEmpty) return 0;
    }
    return nodes_[node].count;
}

std::vector<std::pair<Point, std::uint64_t>> PointSet::multiplicities() const {
    std::map<Point, std::uint64_t> counts;
    for (const auto& x : points_) ++counts[x];
    return {counts.begin(), counts.end()};
}

Rational discrepancy(const PointSet& points) {
    const int q = points.q();
    const BigInt n(points.size());
    const int deepest = points.max_depth();
    Rational best(0);
    const auto consider = [&](const Rational& r) {
        if (r > best) best = r;
    };

    std::vector<BigInt> power(static_cast<std::size_t>(deepest) + 2);
    for (std::size_t k = 0; k < power.size(); ++k) power[k] = int_power(q, static_cast<int>(k));

    const auto trie = points.trie();
    int shallowest_gap = deepest + 1;
    for (std::uint32_t index = 0; index < trie.size(); ++index) {
        const auto& node = trie[index];
        const auto k = static_cast<std::size_t>(node.depth);
        const BigInt gap = BigInt(node.count) * power[k] - n;
        consider(Rational(gap < 0 ? BigInt(-gap) : gap, n * power[k]));
        if (node.depth == deepest) {
            // Shrinking discs around a single point tend to mult(x)/N.
            consider(Rational(BigInt(node.count), n));
            continue;
        }
        for (Digit d = 0; d < static_cast<Digit>(q); ++d)
            if (points.trie_child(index, d) == PointSet::kEmpty) shallowest_gap = std::min(shallowest_gap, node.depth + 1);
    }
    // An empty disc of depth k contributes q^{-k}; depth deepest+1 always has one.
    consider(inverse_power(q, shallowest_gap));
    return best;
}

PointSet full_grid(int q, int T) {
    if (T < 0) throw std::invalid_argument("full_grid: T must be >= 0");
    const auto count = checked_power(q, T);
    std::vector<Point> points;
    points.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::vector<Digit> digits(static_cast<std::size_t>(T));
        auto rest = i;
        for (auto& d : digits) {
            d = static_cast<Digit>(rest % static_cast<std::uint64_t>(q));
            rest /= static_cast<std::uint64_t>(q);
        }
        points.emplace_back(std::move(digits), q);
    }
    return PointSet(q, std::move(points));
}

PointSet thm36_set(int q, int M, int T) {
    if (M < 1) throw std::invalid_argument("thm36_set: M must be >= 1");
    if (T < 2 * M)
        throw std::invalid_argument("thm36_set: need T >= 2M, got T = " + std::to_string(T) +
                                    ", M = " + std::to_string(M));
    const PointSet grid = full_grid(q, T);
    std::vector<Point> points(grid.points().begin(), grid.points().end());
    for (int k = 0; k < 2 * M; ++k) {
        if (k % 2 == 0) {
            std::vector<Digit> digits(static_cast<std::size_t>(T) + 1, 0);
            digits[static_cast<std::size_t>(k)] = 1;
            digits.back() = 1;
            points.emplace_back(std::move(digits), q);
        } else {
            const auto it = std::find(points.begin(), points.end(), uniformizer_pow(k));
            points.erase(it);
        }
    }
    return PointSet(q, std::move(points));
}

PointSet random_set(int q, std::size_t count, int depth, std::uint64_t seed) {
    if (depth < 0) throw std::invalid_argument("random_set: depth must be >= 0");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Digit> digit(0, static_cast<Digit>(q - 1));
    std::vector<Point> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Digit> digits(static_cast<std::size_t>(depth));
        for (auto& d : digits) d = digit(rng);
        points.emplace_back(std::move(digits), q);
    }
    return PointSet(q, std::move(points));
}

PointSet read_point_set(std::istream& in, int q) {
    std::vector<Point> points;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        try {
            points.push_back(parse_point(std::string_view(line).substr(first, last - first + 1), q));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    return PointSet(q, std::move(points));
}

void write_point_set(std::ostream& out, const PointSet& points) {
    for (const auto& x : points.points()) out << format_point(x) << '\n';
}

}  // namespace uk
