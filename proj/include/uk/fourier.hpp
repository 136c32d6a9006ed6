#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "uk/funcspace.hpp"
#include "uk/ring.hpp"

namespace uk {

using Complex = std::complex<double>;

/// Characters of O / pi^n O for prime q, indexed by a flat code in [0, q^n).
///
/// PADIC: code m gives x -> exp(2 pi i m xbar / q^n), xbar = sum x_j q^j.
/// POWERSERIES: the base-q digits m_0 (least significant), m_1, ... of the
/// code give x -> exp(2 pi i sum m_j x_j / q).
class CharacterGroup {
public:
    /// Throws std::invalid_argument unless q is prime.
    CharacterGroup(const RingSpec& spec, int n);

    const RingSpec& spec() const { return spec_; }
    int q() const { return spec_.q(); }
    int depth() const { return n_; }
    std::uint64_t size() const { return size_; }

    /// Smallest l with the character trivial on pi^l O.
    int level(std::uint64_t code) const;
    /// Number of codes of level <= L, which is q^L.
    std::uint64_t count_up_to_level(int L) const;
    /// Codes of level <= L in increasing order.
    std::vector<std::uint64_t> codes_up_to_level(int L) const;

    /// xbar = sum_{j<n} x_j q^j.
    std::uint64_t residue(const Point& x) const;
    Point point_of_residue(std::uint64_t xbar) const;

    Complex eval(std::uint64_t code, const Point& x) const { return eval_residue(code, residue(x)); }
    Complex eval_residue(std::uint64_t code, std::uint64_t xbar) const;

    /// Code of the conjugate character.
    std::uint64_t conjugate(std::uint64_t code) const;

    /// exp(2 pi i k / q^n) in PADIC mode, exp(2 pi i k / q) otherwise.
    Complex root(std::uint64_t k) const { return roots_[k]; }

private:
    RingSpec spec_;
    int n_;
    std::uint64_t size_;
    std::vector<Complex> roots_;
};

/// Coefficients f^(gamma) = integral of f * conj(gamma) over O.
struct FourierTable {
    CharacterGroup group;
    std::vector<Complex> coefficients;

    int depth() const { return group.depth(); }
    const Complex& operator[](std::uint64_t code) const { return coefficients[code]; }
};

/// Radix-q transform over the function's trie; a constant disc contributes
/// only to the trivial character of its subtree. Uses depth n = f.level()
/// unless a larger depth is given.
FourierTable fourier_coefficients(const LCFunction& f);
FourierTable fourier_coefficients(const LCFunction& f, int depth);

/// sum over nontrivial gamma of q^{level(gamma)} |f^(gamma)|.
double fourier_variation(const FourierTable& table);
double fourier_variation(const LCFunction& f);

/// K_L(x) = sum over level(gamma) <= L of gamma(x), summed directly.
double dirichlet_kernel(const CharacterGroup& group, int L, const Point& x);

/// sum over level(gamma) <= L of f^(gamma) gamma(x).
double partial_fourier_sum(const FourierTable& table, int L, const Point& x);

/// CSV with columns index, level, re, im, abs.
void write_fourier_csv(std::ostream& out, const FourierTable& table);

}  // namespace uk
