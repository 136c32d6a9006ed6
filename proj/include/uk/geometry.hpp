#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uk/rational.hpp"
#include "uk/ring.hpp"

namespace uk {

/// Disc pi^k-neighbourhood of its prefix: all x whose first k digits equal
/// the prefix. Radius and Haar measure are both q^{-k}.
///
/// Discs double as the vertices of the rooted q-ary tree of discs: the root
/// is the empty prefix (all of O), and the children of D extend the prefix by
/// one digit. The tree is never materialized; nodes are addressed by prefix.
class Disc {
public:
    /// The root disc O.
    explicit Disc(int q);
    Disc(std::vector<Digit> prefix, int q);

    /// D_r(a) with r = q^{-depth}: truncates the center.
    static Disc around(const Point& center, int depth, int q);

    int q() const { return q_; }
    int depth() const { return static_cast<int>(prefix_.size()); }
    std::span<const Digit> prefix() const { return prefix_; }
    bool is_root() const { return prefix_.empty(); }

    Rational measure() const { return inverse_power(q_, depth()); }
    /// Zero-padded prefix.
    Point center() const;

    bool contains(const Point& x) const;
    /// True when this disc contains the other one (tree ancestor or equal).
    bool contains(const Disc& other) const;

    Disc child(Digit d) const;
    std::vector<Disc> children() const;
    /// Throws on the root.
    Disc parent() const;

    bool operator==(const Disc&) const = default;
    auto operator<=>(const Disc&) const = default;

private:
    int q_;
    std::vector<Digit> prefix_;
};

/// Smallest disc containing both points (longest common digit prefix).
/// Throws std::invalid_argument when x == y.
Disc smallest_disc_containing(const Point& x, const Point& y, int q);

/// Position of a depth-lambda disc in the ordered Beer partition:
/// sum_j rank(a_j) q^{lambda-1-j}, with a_0 most significant.
std::uint64_t beer_index(const Disc& disc, const DigitOrdering& ordering);

/// Inverse of beer_index at a fixed depth.
Disc disc_at_beer_index(std::uint64_t index, int depth, const DigitOrdering& ordering);

/// All discs of a given depth, in dictionary order of their prefixes.
std::vector<Disc> discs_at_depth(int depth, int q);

/// "k:d0,d1,..."; the root is "0:".
Disc parse_disc(std::string_view text, int q);
std::string format_disc(const Disc& disc);

/// q^k as a machine integer; throws std::overflow_error past 2^62.
std::uint64_t checked_power(int q, int k);

}  // namespace uk
