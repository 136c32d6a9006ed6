#include "uk/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace uk::reference {

namespace {

std::uint64_t ipow(int q, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(q);
    return r;
}

void check_cells(int q, int n, const Cells& cells) {
    if (cells.size() != ipow(q, n)) throw std::invalid_argument("reference: cell table has the wrong size");
}

// A disc as (depth, dictionary index of its prefix); covers a block of cells.
using DiscId = std::pair<int, std::uint64_t>;

std::vector<std::vector<DiscId>> partitions(int q, int n, DiscId disc) {
    std::vector<std::vector<DiscId>> out{{disc}};
    if (disc.first == n) return out;
    std::vector<std::vector<DiscId>> combined{{}};
    for (int d = 0; d < q; ++d) {
        const auto sub = partitions(q, n, {disc.first + 1, disc.second * static_cast<std::uint64_t>(q) + d});
        std::vector<std::vector<DiscId>> next;
        for (const auto& head : combined)
            for (const auto& tail : sub) {
                auto joined = head;
                joined.insert(joined.end(), tail.begin(), tail.end());
                next.push_back(std::move(joined));
            }
        combined = std::move(next);
    }
    out.insert(out.end(), combined.begin(), combined.end());
    return out;
}

std::pair<std::uint64_t, std::uint64_t> block(int q, int n, DiscId disc) {
    const auto width = ipow(q, n - disc.first);
    return {disc.second * width, (disc.second + 1) * width};
}

FuncValue block_mean(int q, int n, const Cells& cells, DiscId disc) {
    const auto [lo, hi] = block(q, n, disc);
    FuncValue sum(0);
    for (auto i = lo; i < hi; ++i) sum += cells[i];
    return sum / FuncValue(Rational(BigInt(hi - lo)));
}

}  // namespace

std::uint64_t dictionary_index(int q, int n, const Digits& digits) {
    std::uint64_t index = 0;
    for (int j = 0; j < n; ++j) {
        const Digit d = j < static_cast<int>(digits.size()) ? digits[static_cast<std::size_t>(j)] : 0;
        index = index * static_cast<std::uint64_t>(q) + d;
    }
    return index;
}

Digits cell_digits(int q, int n, std::uint64_t index) {
    Digits digits(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        digits[static_cast<std::size_t>(j)] = static_cast<Digit>(index % static_cast<std::uint64_t>(q));
        index /= static_cast<std::uint64_t>(q);
    }
    return digits;
}

FuncValue taibleson_exhaustive(int q, int n, const Cells& cells) {
    check_cells(q, n, cells);
    FuncValue best(0);
    for (const auto& partition : partitions(q, n, {0, 0})) {
        FuncValue sum(0);
        for (const auto& disc : partition) {
            const auto [lo, hi] = block(q, n, disc);
            FuncValue mn = cells[lo], mx = cells[lo];
            for (auto i = lo; i < hi; ++i) {
                if (cells[i] < mn) mn = cells[i];
                if (cells[i] > mx) mx = cells[i];
            }
            sum += mx - mn;
        }
        if (sum > best) best = sum;
    }
    return best;
}

FuncValue berkovich_naive(int q, int n, const Cells& cells) {
    check_cells(q, n, cells);
    FuncValue total(0);
    for (int k = 0; k < n; ++k)
        for (std::uint64_t p = 0; p < ipow(q, k); ++p) {
            const FuncValue parent = block_mean(q, n, cells, {k, p});
            for (int d = 0; d < q; ++d) {
                const FuncValue child = block_mean(q, n, cells, {k + 1, p * static_cast<std::uint64_t>(q) + d});
                total += abs(child - parent);
            }
        }
    return total;
}

FuncValue beer_enumeration(int q, int n, const Cells& cells, const std::vector<Digit>& perm) {
    check_cells(q, n, cells);
    std::vector<Digit> digit_of_rank(static_cast<std::size_t>(q));
    for (int d = 0; d < q; ++d) digit_of_rank[perm[static_cast<std::size_t>(d)]] = static_cast<Digit>(d);
    FuncValue total(0);
    FuncValue previous(0);
    for (std::uint64_t i = 0; i < cells.size(); ++i) {
        auto digits = cell_digits(q, n, i);  // rank digits, most significant first
        for (auto& r : digits) r = digit_of_rank[r];
        const FuncValue& value = cells[dictionary_index(q, n, digits)];
        if (i > 0) total += abs(value - previous);
        previous = value;
    }
    return total;
}

Rational discrepancy_bruteforce(int q, const std::vector<Digits>& points) {
    if (points.empty()) throw std::invalid_argument("reference: empty point set");
    std::size_t longest = 0;
    for (const auto& x : points) longest = std::max(longest, x.size());
    const BigInt count(points.size());
    const auto digit = [](const Digits& x, std::size_t j) -> Digit { return j < x.size() ? x[j] : 0; };

    Rational best(0);
    for (int k = 0; k <= static_cast<int>(longest) + 1; ++k) {
        const Rational measure = Rational(1) / Rational(int_power(q, k));
        for (std::uint64_t p = 0; p < ipow(q, k); ++p) {
            const auto prefix = cell_digits(q, k, p);
            std::uint64_t inside = 0;
            for (const auto& x : points) {
                bool match = true;
                for (int j = 0; j < k && match; ++j) match = digit(x, static_cast<std::size_t>(j)) == prefix[static_cast<std::size_t>(j)];
                if (match) ++inside;
            }
            Rational gap = Rational(BigInt(inside)) / Rational(count) - measure;
            if (gap < 0) gap = -gap;
            if (gap > best) best = gap;
        }
    }
    for (const auto& x : points) {
        std::uint64_t same = 0;
        for (const auto& y : points) {
            bool equal = true;
            for (std::size_t j = 0; j < longest && equal; ++j) equal = digit(x, j) == digit(y, j);
            if (equal) ++same;
        }
        const Rational limit = Rational(BigInt(same)) / Rational(count);
        if (limit > best) best = limit;
    }
    return best;
}

std::vector<std::complex<double>> fourier_naive(int q, int n, Arithmetic mode, const Cells& cells) {
    check_cells(q, n, cells);
    const auto size = ipow(q, n);
    std::vector<double> values(size);
    std::vector<Digits> digits(size);
    for (std::uint64_t xbar = 0; xbar < size; ++xbar) {
        Digits x(static_cast<std::size_t>(n));
        auto rest = xbar;
        for (auto& d : x) {
            d = static_cast<Digit>(rest % static_cast<std::uint64_t>(q));
            rest /= static_cast<std::uint64_t>(q);
        }
        values[xbar] = cells[dictionary_index(q, n, x)].to_double();
        digits[xbar] = std::move(x);
    }
    std::vector<std::complex<double>> out(size);
    for (std::uint64_t m = 0; m < size; ++m) {
        const auto mdigits = [&] {
            Digits md(static_cast<std::size_t>(n));
            auto rest = m;
            for (auto& d : md) {
                d = static_cast<Digit>(rest % static_cast<std::uint64_t>(q));
                rest /= static_cast<std::uint64_t>(q);
            }
            return md;
        }();
        std::complex<double> sum = 0.0;
        for (std::uint64_t xbar = 0; xbar < size; ++xbar) {
            double phase;
            if (mode == Arithmetic::padic) {
                phase = static_cast<double>(static_cast<unsigned __int128>(m) * xbar % size) / static_cast<double>(size);
            } else {
                std::uint64_t s = 0;
                for (int j = 0; j < n; ++j) s += mdigits[static_cast<std::size_t>(j)] * digits[xbar][static_cast<std::size_t>(j)];
                phase = static_cast<double>(s % static_cast<std::uint64_t>(q)) / q;
            }
            sum += values[xbar] * std::exp(std::complex<double>(0.0, -2.0 * std::numbers::pi * phase));
        }
        out[m] = sum / static_cast<double>(size);
    }
    return out;
}

Cells translate_naive(int q, int n, Arithmetic mode, const Cells& cells, const Digits& c) {
    check_cells(q, n, cells);
    const auto size = ipow(q, n);
    const auto cdigit = [&](int j) -> std::int64_t { return j < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(j)] : 0; };
    Cells out(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        const auto x = cell_digits(q, n, i);
        Digits y(static_cast<std::size_t>(n));
        std::int64_t borrow = 0;
        for (int j = 0; j < n; ++j) {
            std::int64_t d = static_cast<std::int64_t>(x[static_cast<std::size_t>(j)]) - cdigit(j);
            if (mode == Arithmetic::padic) {
                d -= borrow;
                borrow = d < 0 ? 1 : 0;
                if (d < 0) d += q;
            } else {
                d = ((d % q) + q) % q;
            }
            y[static_cast<std::size_t>(j)] = static_cast<Digit>(d);
        }
        out[i] = cells[dictionary_index(q, n, y)];
    }
    return out;
}

}  // namespace uk::reference
