#include "uk/funcspace.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace uk {

std::string_view to_string(Truncation t) {
    switch (t) {
        case Truncation::exact: return "exact";
        case Truncation::average: return "average";
        case Truncation::sample: return "sample";
    }
    return "?";
}

LCFunction::LCFunction(RingSpec spec, int level, Truncation truncation)
    : spec_(spec), level_(level), truncation_(truncation) {
    if (level < 0) throw std::invalid_argument("function level must be >= 0");
}

namespace {

struct Builder {
    const LCFunction::DiscRule& rule;
    std::vector<LCFunction::Node>& nodes;
    int q;
    int level;

    void fill(std::size_t index, const Disc& disc) {
        if (auto value = rule(disc)) {
            nodes[index] = LCFunction::Node{*value, *value, *value, LCFunction::kNoChildren};
            return;
        }
        if (disc.depth() >= level)
            throw std::logic_error("disc rule left a level-" + std::to_string(level) + " cell undecided");
        const auto first = nodes.size();
        nodes.resize(first + static_cast<std::size_t>(q));
        nodes[index].first_child = static_cast<std::uint32_t>(first);
        for (Digit d = 0; d < static_cast<Digit>(q); ++d) fill(first + d, disc.child(d));

        FuncValue sum = nodes[first].mean;
        FuncValue lo = nodes[first].min;
        FuncValue hi = nodes[first].max;
        bool collapsible = nodes[first].is_leaf();
        for (std::size_t i = first + 1; i < first + static_cast<std::size_t>(q); ++i) {
            sum += nodes[i].mean;
            lo = min(lo, nodes[i].min);
            hi = max(hi, nodes[i].max);
            collapsible = collapsible && nodes[i].is_leaf() && nodes[i].mean == nodes[first].mean;
        }
        if (collapsible) {
            const FuncValue value = nodes[first].mean;
            nodes.resize(first);
            nodes[index] = LCFunction::Node{value, value, value, LCFunction::kNoChildren};
            return;
        }
        nodes[index].mean = sum / FuncValue(q);
        nodes[index].min = lo;
        nodes[index].max = hi;
    }
};

}  // namespace

LCFunction LCFunction::build(const RingSpec& spec, int level, const DiscRule& rule, Truncation truncation) {
    LCFunction f(spec, level, truncation);
    f.nodes_.resize(1);
    Builder{rule, f.nodes_, spec.q(), level}.fill(0, Disc(spec.q()));
    return f;
}

LCFunction LCFunction::from_table(const RingSpec& spec, int level, std::span<const FuncValue> values,
                                  Truncation truncation) {
    const auto cells = checked_power(spec.q(), level);
    if (values.size() != cells)
        throw std::invalid_argument("function table needs q^level = " + std::to_string(cells) + " values, got " +
                                    std::to_string(values.size()));
    const auto q = static_cast<std::uint64_t>(spec.q());
    return build(
        spec, level,
        [&](const Disc& disc) -> std::optional<FuncValue> {
            std::uint64_t first = 0;
            for (Digit a : disc.prefix()) first = first * q + a;
            const auto width = checked_power(spec.q(), level - disc.depth());
            first *= width;
            for (std::uint64_t i = first + 1; i < first + width; ++i)
                if (!(values[i] == values[first])) return std::nullopt;
            return values[first];
        },
        truncation);
}

LCFunction LCFunction::constant(const RingSpec& spec, FuncValue value, int level) {
    return build(spec, level, [&](const Disc&) { return std::optional<FuncValue>(value); });
}

std::size_t LCFunction::leaf_count() const {
    std::size_t count = 0;
    for (const auto& node : nodes_) count += node.is_leaf();
    return count;
}

const LCFunction::Node* LCFunction::descend(const Disc& disc) const {
    const Node* node = &root();
    for (Digit d : disc.prefix()) {
        if (node->is_leaf()) break;
        node = &child(*node, d);
    }
    return node;
}

FuncValue LCFunction::evaluate(const Point& x) const {
    const Node* node = &root();
    for (std::size_t k = 0; !node->is_leaf(); ++k) node = &child(*node, x.digit(k));
    return node->mean;
}

FuncValue LCFunction::disc_average(const Disc& disc) const {
    if (disc.q() != q()) throw std::invalid_argument("disc and function disagree on q");
    return descend(disc)->mean;
}

std::pair<FuncValue, FuncValue> LCFunction::range(const Disc& disc) const {
    if (disc.q() != q()) throw std::invalid_argument("disc and function disagree on q");
    const Node* node = descend(disc);
    return {node->min, node->max};
}

std::optional<FuncValue> LCFunction::constant_on(const Disc& disc) const {
    const auto [lo, hi] = range(disc);
    if (lo == hi) return lo;
    return std::nullopt;
}

std::vector<FuncValue> LCFunction::cell_values() const {
    const auto cells = checked_power(q(), level_);
    std::vector<FuncValue> out;
    out.reserve(cells);
    for_each_leaf([&](const Disc& disc, const FuncValue& value) {
        const auto width = checked_power(q(), level_ - disc.depth());
        out.insert(out.end(), width, value);
    });
    return out;
}

void LCFunction::for_each_leaf(const std::function<void(const Disc&, const FuncValue&)>& visit) const {
    const std::function<void(const Node&, const Disc&)> walk = [&](const Node& node, const Disc& disc) {
        if (node.is_leaf()) {
            visit(disc, node.mean);
            return;
        }
        for (Digit d = 0; d < static_cast<Digit>(q()); ++d) walk(child(node, d), disc.child(d));
    };
    walk(root(), Disc(q()));
}

bool LCFunction::same_values(const LCFunction& other) const {
    return q() == other.q() && level_ == other.level_ && cell_values() == other.cell_values();
}

LCFunction indicator(const RingSpec& spec, const Disc& disc) { return indicator(spec, disc, disc.depth()); }

LCFunction indicator(const RingSpec& spec, const Disc& disc, int level) {
    if (disc.q() != spec.q()) throw std::invalid_argument("indicator: disc has the wrong q");
    if (level < disc.depth()) throw std::invalid_argument("indicator: level below the disc depth");
    return LCFunction::build(spec, level, [&](const Disc& d) -> std::optional<FuncValue> {
        if (disc.contains(d)) return FuncValue(1);
        if (!d.contains(disc)) return FuncValue(0);
        return std::nullopt;
    });
}

double abs_power_cell_mean(int q, double t, int k) {
    const double qd = q;
    const double c = (qd - 1.0) / (qd - std::pow(qd, -t));
    return c * std::pow(qd, -static_cast<double>(k) * t);
}

LCFunction abs_power(const RingSpec& spec, const Point& c, double t, int level, AbsPowerMode mode) {
    if (!(t > 0.0)) throw std::invalid_argument("abs_power: exponent t must be > 0");
    if (static_cast<int>(c.length()) > level)
        throw std::invalid_argument("abs_power: center needs more digits than the level resolves");
    for (Digit d : c.digits())
        if (d >= static_cast<Digit>(spec.q())) throw std::invalid_argument("abs_power: center digit out of range");
    const double qd = spec.q();
    return LCFunction::build(
        spec, level,
        [&](const Disc& disc) -> std::optional<FuncValue> {
            const auto prefix = disc.prefix();
            for (std::size_t j = 0; j < prefix.size(); ++j)
                if (prefix[j] != c.digit(j)) return FuncValue(std::pow(qd, -static_cast<double>(j) * t));
            if (disc.depth() < level) return std::nullopt;
            if (mode == AbsPowerMode::sample) return FuncValue(0.0);
            return FuncValue(abs_power_cell_mean(spec.q(), t, level));
        },
        mode == AbsPowerMode::average ? Truncation::average : Truncation::sample);
}

Disc alternating_disc(int k, int q) {
    std::vector<Digit> prefix(static_cast<std::size_t>(k) + 1, 0);
    prefix.back() = 1;
    return Disc(std::move(prefix), q);
}

LCFunction alternating_function(const RingSpec& spec, int level, AlternatingWeights weights, int M) {
    int last = 0;
    if (weights == AlternatingWeights::harmonic) {
        if (level < 2) throw std::invalid_argument("harmonic alternating function needs level >= 2");
        last = level - 2;
    } else {
        if (M < 1) throw std::invalid_argument("unit alternating function needs M >= 1");
        if (level < 2 * M + 1)
            throw std::invalid_argument("unit alternating function with M = " + std::to_string(M) +
                                        " needs level >= " + std::to_string(2 * M + 1));
        last = 2 * M - 1;
    }
    const auto weight = [&](int k) {
        const int sign = k % 2 == 0 ? 1 : -1;
        return weights == AlternatingWeights::harmonic ? FuncValue(Rational(sign, k + 1)) : FuncValue(sign);
    };
    return LCFunction::build(spec, level, [&](const Disc& disc) -> std::optional<FuncValue> {
        const auto prefix = disc.prefix();
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (prefix[i] == 0) continue;
            // First nonzero digit at i: disc lies in A_i or misses every A_k.
            if (prefix[i] == 1 && static_cast<int>(i) <= last) return weight(static_cast<int>(i));
            return FuncValue(0);
        }
        // Disc around 0 of depth d contains A_k for every k >= d.
        if (disc.depth() > last) return FuncValue(0);
        return std::nullopt;
    });
}

LCFunction translate(const LCFunction& f, const Point& c) {
    const int n = f.level();
    if (n == 0) return f;
    const auto& spec = f.spec();
    spec.require_arithmetic();
    const auto cells = discs_at_depth(n, f.q());
    std::vector<FuncValue> values;
    values.reserve(cells.size());
    for (const auto& cell : cells) values.push_back(f.evaluate(sub_mod(cell.center(), c, n, spec)));
    return LCFunction::from_table(spec, n, values, f.truncation());
}

LCFunction linear_combine(std::span<const Term> terms) {
    if (terms.empty()) throw std::invalid_argument("linear_combine: no terms");
    const auto& spec = terms.front().function->spec();
    int level = 0;
    Truncation truncation = Truncation::exact;
    for (const auto& term : terms) {
        if (!(term.function->spec() == spec)) throw std::invalid_argument("linear_combine: mixed ring specs");
        level = std::max(level, term.function->level());
        if (term.function->truncation() == Truncation::average) truncation = Truncation::average;
        if (term.function->truncation() == Truncation::sample && truncation == Truncation::exact)
            truncation = Truncation::sample;
    }
    return LCFunction::build(
        spec, level,
        [&](const Disc& disc) -> std::optional<FuncValue> {
            FuncValue sum(0);
            for (const auto& term : terms) {
                const auto value = term.function->constant_on(disc);
                if (!value) return std::nullopt;
                sum += term.coefficient * *value;
            }
            return sum;
        },
        truncation);
}

LCFunction coarsen(const LCFunction& f, int level) {
    if (level < 0 || level > f.level()) throw std::invalid_argument("coarsen: level out of range");
    return LCFunction::build(
        f.spec(), level,
        [&](const Disc& disc) -> std::optional<FuncValue> {
            if (disc.depth() == level) return f.disc_average(disc);
            return f.constant_on(disc);
        },
        f.truncation() == Truncation::sample ? Truncation::sample : Truncation::average);
}

LCFunction random_lc(const RingSpec& spec, int level, std::uint64_t seed, const RandomFunctionOptions& options) {
    if (!(options.lo <= options.hi)) throw std::invalid_argument("random_lc: empty value range");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto draw = [&]() -> FuncValue {
        if (options.integer_valued) {
            const auto lo = static_cast<long long>(std::ceil(options.lo));
            const auto hi = static_cast<long long>(std::floor(options.hi));
            if (lo > hi) throw std::invalid_argument("random_lc: no integers in the value range");
            return FuncValue(Rational(std::uniform_int_distribution<long long>(lo, hi)(rng)));
        }
        return FuncValue(options.lo + (options.hi - options.lo) * unit(rng));
    };
    return LCFunction::build(spec, level, [&](const Disc& disc) -> std::optional<FuncValue> {
        if (disc.depth() == level) return draw();
        if (!disc.is_root() && unit(rng) < options.collapse_probability) return draw();
        return std::nullopt;
    });
}

}  // namespace uk
