#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "uk/geometry.hpp"
#include "uk/rational.hpp"
#include "uk/ring.hpp"

namespace uk {

/// Finite multiset of points with a prefix-count trie built once.
///
/// Counting is with multiplicity. Every point is read as its zero-padded
/// expansion, so the trie only needs to reach max_depth: below that depth
/// each distinct point has its own chain of discs.
class PointSet {
public:
    /// Throws std::invalid_argument on an empty set.
    PointSet(int q, std::vector<Point> points);

    int q() const { return q_; }
    std::size_t size() const { return points_.size(); }
    /// Longest digit string among the points.
    int max_depth() const { return max_depth_; }
    std::span<const Point> points() const { return points_; }

    /// |X cap D| with multiplicity.
    std::uint64_t counts_in(const Disc& disc) const;

    /// Distinct points with their multiplicities, sorted.
    std::vector<std::pair<Point, std::uint64_t>> multiplicities() const;

    struct TrieNode {
        std::uint64_t count = 0;
        int depth = 0;
    };
    static constexpr std::uint32_t kEmpty = 0xffffffffu;

    std::span<const TrieNode> trie() const { return nodes_; }
    /// Child slot of a trie node; kEmpty when no point lies there.
    std::uint32_t trie_child(std::uint32_t node, Digit d) const { return children_[node * q_ + d]; }

private:
    int q_;
    std::vector<Point> points_;
    int max_depth_ = 0;
    std::vector<TrieNode> nodes_;
    std::vector<std::uint32_t> children_;
};

/// sup over all discs D of | |X cap D|/|X| - mu(D) |, exactly. The supremum
/// includes the limit mult(x)/N of shrinking discs around each point.
Rational discrepancy(const PointSet& points);

/// All q^T points a_0 + ... + a_{T-1} pi^{T-1}.
PointSet full_grid(int q, int T);

/// Full grid of depth T with pi^k + pi^T added for even k < 2M and pi^k
/// removed for odd k < 2M. Requires T >= 2M.
PointSet thm36_set(int q, int M, int T);

/// N i.i.d. uniform digit strings of the given length.
PointSet random_set(int q, std::size_t count, int depth, std::uint64_t seed);

/// One point per line in digit-list format; '#' starts a comment.
PointSet read_point_set(std::istream& in, int q);
void write_point_set(std::ostream& out, const PointSet& points);

}  // namespace uk
