#include "uk/variation.hpp"

#include <array>
#include <stdexcept>

namespace uk {

namespace {

using Node = LCFunction::Node;

void check_ordering(const LCFunction& f, const DigitOrdering& ordering) {
    if (ordering.q() != f.q()) throw std::invalid_argument("digit ordering has the wrong q");
}

FuncValue taibleson_at(const LCFunction& f, const Node& node) {
    if (node.is_leaf()) return FuncValue(0);
    FuncValue refined(0);
    for (Digit d = 0; d < static_cast<Digit>(f.q()); ++d) refined += taibleson_at(f, f.child(node, d));
    return max(node.max - node.min, refined);
}

FuncValue berkovich_at(const LCFunction& f, const Node& node) {
    if (node.is_leaf()) return FuncValue(0);
    FuncValue sum(0);
    for (Digit d = 0; d < static_cast<Digit>(f.q()); ++d) {
        const Node& sub = f.child(node, d);
        sum += abs(sub.mean - node.mean);
        sum += berkovich_at(f, sub);
    }
    return sum;
}

}  // namespace

FuncValue oscillation(const LCFunction& f, const Disc& disc) {
    const auto [lo, hi] = f.range(disc);
    return hi - lo;
}

FuncValue taibleson_variation(const LCFunction& f) { return taibleson_at(f, f.root()); }

FuncValue beer_variation(const LCFunction& f, const DigitOrdering& ordering) {
    check_ordering(f, ordering);
    // Leaves visited in rank order are consecutive blocks of level-n cells.
    FuncValue total(0);
    const FuncValue* previous = nullptr;
    const auto walk = [&](const auto& self, const Node& node) -> void {
        if (node.is_leaf()) {
            if (previous) total += abs(node.mean - *previous);
            previous = &node.mean;
            return;
        }
        for (Digit r = 0; r < static_cast<Digit>(f.q()); ++r) self(self, f.child(node, ordering.digit_at(r)));
    };
    walk(walk, f.root());
    return total;
}

FuncValue beer_variation_at(const LCFunction& f, const DigitOrdering& ordering, int lambda) {
    check_ordering(f, ordering);
    if (lambda < 0) throw std::invalid_argument("beer_variation_at: negative depth");
    const auto cells = checked_power(f.q(), lambda);
    const auto first = f.range(disc_at_beer_index(0, lambda, ordering));
    std::array<FuncValue, 2> value{first.first, first.second};
    std::array<FuncValue, 2> best{FuncValue(0), FuncValue(0)};
    for (std::uint64_t i = 1; i < cells; ++i) {
        const auto [lo, hi] = f.range(disc_at_beer_index(i, lambda, ordering));
        const std::array<FuncValue, 2> next_value{lo, hi};
        std::array<FuncValue, 2> next_best;
        for (int s = 0; s < 2; ++s)
            next_best[s] = max(best[0] + abs(next_value[s] - value[0]), best[1] + abs(next_value[s] - value[1]));
        value = next_value;
        best = next_best;
    }
    return max(best[0], best[1]);
}

FuncValue berkovich_variation(const LCFunction& f) { return berkovich_at(f, f.root()); }

VariationReport variation_report(const LCFunction& f, const DigitOrdering& ordering) {
    return VariationReport{taibleson_variation(f), beer_variation(f, ordering), berkovich_variation(f), f.level(),
                           f.truncation()};
}

}  // namespace uk
