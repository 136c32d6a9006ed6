#pragma once

#include "uk/funcspace.hpp"
#include "uk/geometry.hpp"
#include "uk/value.hpp"

namespace uk {

/// sup over x, y in D of f(x) - f(y).
FuncValue oscillation(const LCFunction& f, const Disc& disc);

/// Supremum over finite disc partitions of the summed oscillations, via
/// V(D) = max(osc(D), sum over children V(D')).
FuncValue taibleson_variation(const LCFunction& f);

/// Beer variation: sum of |consecutive differences| over the level-n cells
/// in the dictionary order of the given digit ordering. V_lambda is constant
/// for lambda >= n, so this is the limit.
FuncValue beer_variation(const LCFunction& f, const DigitOrdering& ordering);

/// V_lambda at an arbitrary depth: the supremum over x_i in E_i of
/// sum |f(x_i) - f(x_{i-1})|. Below the function level each x_i sits at the
/// min or the max of f on E_i, found by a two-state chain DP.
FuncValue beer_variation_at(const LCFunction& f, const DigitOrdering& ordering, int lambda);

/// Sum over all discs D and children D' of |f(D') - f(D)|.
FuncValue berkovich_variation(const LCFunction& f);

struct VariationReport {
    FuncValue taibleson;
    FuncValue beer;
    FuncValue berkovich;
    int level = 0;
    Truncation truncation = Truncation::exact;
};

VariationReport variation_report(const LCFunction& f, const DigitOrdering& ordering);

}  // namespace uk
