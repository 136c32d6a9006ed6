#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "uk/rational.hpp"
#include "uk/ring.hpp"
#include "uk/value.hpp"

// Slow, direct implementations used as test oracles. They work on flat cell
// tables (q^n values, dictionary order with a_0 most significant) and raw
// digit vectors, and share no code with the trie-based algorithms.
namespace uk::reference {

using Cells = std::vector<FuncValue>;
using Digits = std::vector<Digit>;

/// Max over every disc partition of O (depth <= n) of the summed oscillations.
FuncValue taibleson_exhaustive(int q, int n, const Cells& cells);

/// Sum over every disc and child of |average difference|, averages summed
/// cell by cell.
FuncValue berkovich_naive(int q, int n, const Cells& cells);

/// Beer variation with cells visited by rank order, digit by digit.
/// `perm[d]` is the rank of digit d.
FuncValue beer_enumeration(int q, int n, const Cells& cells, const std::vector<Digit>& perm);

/// Enumerates all q^k discs for k <= maxdepth + 1 and counts points by
/// prefix comparison; adds mult(x)/N for each point.
Rational discrepancy_bruteforce(int q, const std::vector<Digits>& points);

/// f^(m) by direct summation over all q^n residues with freshly evaluated
/// exponentials. Codes as in CharacterGroup.
std::vector<std::complex<double>> fourier_naive(int q, int n, Arithmetic mode, const Cells& cells);

/// Cell values of x -> f(x - c) computed with schoolbook digit arithmetic.
Cells translate_naive(int q, int n, Arithmetic mode, const Cells& cells, const Digits& c);

/// Dictionary index of the level-n cell holding the digits.
std::uint64_t dictionary_index(int q, int n, const Digits& digits);
/// Digits of the cell at a dictionary index.
Digits cell_digits(int q, int n, std::uint64_t index);

}  // namespace uk::reference
