#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "uk/geometry.hpp"
#include "uk/ring.hpp"
#include "uk/value.hpp"

namespace uk {

/// How a stored function relates to the function it stands for.
enum class Truncation {
    exact,    // genuinely locally constant at its level
    average,  // cell means of a finer function (conditional expectation)
    sample,   // cell-center samples of a finer function
};

std::string_view to_string(Truncation t);

/// Locally constant function O -> R of level n, stored as a collapsed q-ary
/// trie: a leaf at depth d < n means the function is constant on that disc.
///
/// Tries are canonical: no internal node has q leaf children carrying one
/// value. Each node caches the disc average, minimum and maximum of its
/// subtree, so averages and oscillations are O(depth) queries.
class LCFunction {
public:
    static constexpr std::uint32_t kNoChildren = 0xffffffffu;

    struct Node {
        FuncValue mean;
        FuncValue min;
        FuncValue max;
        /// Children occupy nodes [first_child, first_child + q).
        std::uint32_t first_child = kNoChildren;

        bool is_leaf() const { return first_child == kNoChildren; }
    };

    /// Decides whether f is constant on a disc: returns that value, or
    /// nullopt when the disc must be split. Must return a value at depth
    /// `level`.
    using DiscRule = std::function<std::optional<FuncValue>(const Disc&)>;

    /// Builds by depth-first refinement; the rule is called in prefix order.
    static LCFunction build(const RingSpec& spec, int level, const DiscRule& rule,
                            Truncation truncation = Truncation::exact);

    /// Values of the q^level cells in dictionary order (a_0 most significant).
    static LCFunction from_table(const RingSpec& spec, int level, std::span<const FuncValue> values,
                                 Truncation truncation = Truncation::exact);

    static LCFunction constant(const RingSpec& spec, FuncValue value, int level = 0);

    const RingSpec& spec() const { return spec_; }
    int q() const { return spec_.q(); }
    int level() const { return level_; }
    Truncation truncation() const { return truncation_; }

    std::span<const Node> nodes() const { return nodes_; }
    const Node& root() const { return nodes_.front(); }
    const Node& child(const Node& node, Digit d) const { return nodes_[node.first_child + d]; }
    std::size_t leaf_count() const;

    /// Depends only on the first `level` digits of x.
    FuncValue evaluate(const Point& x) const;
    /// f(D) = mu(D)^{-1} * integral of f over D.
    FuncValue disc_average(const Disc& disc) const;
    FuncValue integral() const { return root().mean; }
    /// (min, max) of f over the disc.
    std::pair<FuncValue, FuncValue> range(const Disc& disc) const;
    /// The value of f on the disc if f is constant there.
    std::optional<FuncValue> constant_on(const Disc& disc) const;

    /// All q^level cell values in dictionary order.
    std::vector<FuncValue> cell_values() const;

    /// Visits leaves in prefix order with their discs.
    void for_each_leaf(const std::function<void(const Disc&, const FuncValue&)>& visit) const;

    /// Same level, same values on every cell.
    bool same_values(const LCFunction& other) const;

private:
    LCFunction(RingSpec spec, int level, Truncation truncation);

    const Node* descend(const Disc& disc) const;

    RingSpec spec_;
    int level_;
    Truncation truncation_;
    std::vector<Node> nodes_;
};

LCFunction indicator(const RingSpec& spec, const Disc& disc);
/// Indicator stored at a level >= depth(disc).
LCFunction indicator(const RingSpec& spec, const Disc& disc, int level);

enum class AbsPowerMode { average, sample };

/// |x - c|^t truncated to level n. AVERAGE gives every cell its exact mean;
/// the cell of c gets C q^{-nt} with C = (q-1)/(q-q^{-t}). SAMPLE uses the
/// cell-center value (0 on the cell of c). Requires t > 0 and length(c) <= n.
LCFunction abs_power(const RingSpec& spec, const Point& c, double t, int level,
                     AbsPowerMode mode = AbsPowerMode::average);

/// Mean of |x|^t over the disc of radius q^{-k} around 0.
double abs_power_cell_mean(int q, double t, int k);

enum class AlternatingWeights { harmonic, unit };

/// sum_k w_k 1_{A_k} with A_k the disc of radius q^{-(k+1)} around pi^k.
/// Harmonic: w_k = (-1)^k/(k+1), k <= n-2, needs n >= 2.
/// Unit(M): w_k = (-1)^k, k <= 2M-1, needs n >= 2M+1.
LCFunction alternating_function(const RingSpec& spec, int level, AlternatingWeights weights, int M = 0);

/// The disc A_k.
Disc alternating_disc(int k, int q);

/// x -> f(x - c), computed mod pi^level in the spec's arithmetic.
LCFunction translate(const LCFunction& f, const Point& c);

struct Term {
    FuncValue coefficient;
    const LCFunction* function;
};

/// sum of coefficient * function, at the largest level among the terms.
LCFunction linear_combine(std::span<const Term> terms);

/// Conditional expectation onto level m <= f.level().
LCFunction coarsen(const LCFunction& f, int level);

struct RandomFunctionOptions {
    double lo = -1.0;
    double hi = 1.0;
    /// Draw integers in [lo, hi] as exact rationals instead of doubles.
    bool integer_valued = false;
    /// Probability that an internal disc is made constant.
    double collapse_probability = 0.25;
};

LCFunction random_lc(const RingSpec& spec, int level, std::uint64_t seed, const RandomFunctionOptions& options = {});

}  // namespace uk
