#pragma once

#include <optional>
#include <string>

#include "uk/discrepancy.hpp"
#include "uk/funcspace.hpp"
#include "uk/ring.hpp"

namespace uk {

/// Builds a function from its JSON literal:
///   {"kind":"indicator","disc":"k:d0,..."}
///   {"kind":"abs_power","c":"digits","t":t,"mode":"average|sample"}
///   {"kind":"alternating","weights":"harmonic|unit","M":M}
///   {"kind":"table","level":n,"values":[...]}
/// A "level" key in the literal wins; `level` fills in when it is absent.
/// Table values that are JSON integers or "p/q" strings stay exact.
/// Throws std::invalid_argument on malformed input.
LCFunction parse_function_literal(const std::string& text, const RingSpec& spec, std::optional<int> level);

/// "grid:T", "thm36:M:T", "random:N:depth:seed", or a point-file path.
PointSet load_points(const std::string& source, int q);

/// Digit-rank permutation "r0,r1,..."; empty means identity.
DigitOrdering parse_ordering(const std::string& text, int q);

}  // namespace uk
