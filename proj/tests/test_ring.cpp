#include <doctest.h>

#include <random>

#include "uk/ring.hpp"

using namespace uk;

namespace {

Point P(const char* text, int q) { return parse_point(text, q); }

// All residues mod pi^n as points.
std::vector<Point> residues(int q, int n) {
    std::vector<Point> out;
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(q);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::vector<Digit> digits(static_cast<std::size_t>(n));
        auto rest = i;
        for (auto& d : digits) {
            d = static_cast<Digit>(rest % static_cast<std::uint64_t>(q));
            rest /= static_cast<std::uint64_t>(q);
        }
        out.emplace_back(std::move(digits), q);
    }
    return out;
}

std::uint64_t as_integer(const Point& x, int q) {
    std::uint64_t value = 0;
    for (std::size_t k = x.length(); k-- > 0;) value = value * static_cast<std::uint64_t>(q) + x.digit(k);
    return value;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(RingSpec(1, Arithmetic::padic), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec(4, Arithmetic::padic), std::invalid_argument);
    const RingSpec composite(4, Arithmetic::power_series);
    CHECK(composite.q() == 4);
    CHECK_THROWS_AS(add_mod(P("1", 4), P("1", 4), 2, composite), std::invalid_argument);
    CHECK(parse_arithmetic("powerseries") == Arithmetic::power_series);
    CHECK_THROWS(parse_arithmetic("adelic"));
}

TEST_CASE("points are canonical") {
    CHECK(P("1,0,0", 3) == P("1", 3));
    CHECK(P("", 3).is_zero());
    CHECK(P("0", 3).is_zero());
    CHECK(format_point(P("1,0,2", 3)) == "1,0,2");
    CHECK(format_point(Point()) == "0");
    CHECK_THROWS_AS(P("3", 3), std::invalid_argument);
    CHECK_THROWS_AS(P("1,,2", 3), std::invalid_argument);
    CHECK_THROWS_AS(P("a", 3), std::invalid_argument);
}

TEST_CASE("valuation and absolute value") {
    const RingSpec three(3, Arithmetic::padic);
    const RingSpec two(2, Arithmetic::padic);
    CHECK_FALSE(valuation(Point()).has_value());
    CHECK(valuation(P("0,0,2", 3)) == 2);
    CHECK(valuation(uniformizer_pow(5)) == 5);
    CHECK(abs(Point(), three) == 0);
    CHECK(abs(P("0,0,2", 3), three) == Rational(1, 9));
    CHECK(abs(P("1,1", 2), two) == 1);
    CHECK(abs(uniformizer_pow(3), two) == Rational(1, 8));
}

TEST_CASE("addition examples") {
    const RingSpec padic2(2, Arithmetic::padic);
    const RingSpec series2(2, Arithmetic::power_series);
    const RingSpec padic3(3, Arithmetic::padic);
    CHECK(add_mod(P("1", 2), P("1", 2), 4, padic2) == P("0,1", 2));
    CHECK(add_mod(P("1", 2), P("1", 2), 4, series2).is_zero());
    CHECK(add_mod(P("2,2", 3), P("1,0", 3), 3, padic3) == P("0,0,1", 3));
    // The carry out of the top digit is dropped.
    CHECK(add_mod(P("1,1", 2), P("1", 2), 2, padic2).is_zero());
}

TEST_CASE("negation examples") {
    const RingSpec padic2(2, Arithmetic::padic);
    const RingSpec series3(3, Arithmetic::power_series);
    CHECK(neg_mod(Point(), 3, padic2).is_zero());
    CHECK(neg_mod(P("1", 2), 3, padic2) == P("1,1,1", 2));
    CHECK(neg_mod(P("1,2", 3), 2, series3) == P("2,1", 3));
    CHECK(sub_mod(P("0,1", 2), P("1", 2), 3, padic2) == P("1", 2));
}

TEST_CASE("uniformizer powers and truncation") {
    CHECK(uniformizer_pow(0) == P("1", 5));
    CHECK(uniformizer_pow(2) == P("0,0,1", 5));
    CHECK(shift(P("1,2", 3), 3) == P("0,1,2", 3));
    CHECK(shift(P("1,2", 3), 2) == P("0,1", 3));
    CHECK(truncate(P("1,2,1", 3), 2) == P("1,2", 3));
}

TEST_CASE("addition forms a group for small q^n") {
    for (auto [q, n] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{5, 2}}) {
        for (auto mode : {Arithmetic::padic, Arithmetic::power_series}) {
            const RingSpec spec(q, mode);
            const auto all = residues(q, n);
            bool ok = true;
            for (const auto& x : all) {
                ok = ok && add_mod(x, Point(), n, spec) == x;
                ok = ok && add_mod(x, neg_mod(x, n, spec), n, spec).is_zero();
                for (const auto& y : all) {
                    const auto xy = add_mod(x, y, n, spec);
                    ok = ok && xy == add_mod(y, x, n, spec);
                    for (const auto& z : all)
                        ok = ok && add_mod(xy, z, n, spec) == add_mod(x, add_mod(y, z, n, spec), n, spec);
                }
            }
            CHECK_MESSAGE(ok, "q=", q, " n=", n, " mode=", to_string(mode));
        }
    }
}

TEST_CASE("padic addition is integer addition mod q^n") {
    for (auto [q, n] : {std::pair{2, 6}, std::pair{3, 4}, std::pair{7, 2}}) {
        const RingSpec spec(q, Arithmetic::padic);
        std::uint64_t modulus = 1;
        for (int i = 0; i < n; ++i) modulus *= static_cast<std::uint64_t>(q);
        const auto all = residues(q, n);
        for (const auto& x : all)
            for (const auto& y : all)
                REQUIRE(as_integer(add_mod(x, y, n, spec), q) == (as_integer(x, q) + as_integer(y, q)) % modulus);
    }
}

TEST_CASE("ultrametric inequality") {
    std::mt19937_64 rng(11);
    for (auto mode : {Arithmetic::padic, Arithmetic::power_series}) {
        for (int q : {2, 3, 5}) {
            const RingSpec spec(q, mode);
            for (int trial = 0; trial < 300; ++trial) {
                const int n = 1 + static_cast<int>(rng() % 6);
                const auto draw = [&] {
                    std::vector<Digit> digits(static_cast<std::size_t>(n));
                    for (auto& d : digits) d = static_cast<Digit>(rng() % q);
                    return Point(std::move(digits), q);
                };
                const auto x = draw(), y = draw(), z = draw();
                const auto xz = abs(sub_mod(x, z, n, spec), spec);
                const auto bound = std::max(abs(sub_mod(x, y, n, spec), spec), abs(sub_mod(y, z, n, spec), spec));
                REQUIRE(xz <= bound);
            }
        }
    }
}

TEST_CASE("geometric points solve (1 - pi) x = s") {
    CHECK(geometric_point(0, 4, RingSpec(3, Arithmetic::padic)).is_zero());
    CHECK(geometric_point(2, 4, RingSpec(3, Arithmetic::power_series)) == P("2,2,2,2", 3));
    for (auto mode : {Arithmetic::padic, Arithmetic::power_series}) {
        for (auto [q, n] : {std::pair{2, 5}, std::pair{3, 2}, std::pair{3, 4}, std::pair{5, 3}}) {
            const RingSpec spec(q, mode);
            for (Digit s = 0; s < static_cast<Digit>(q); ++s) {
                // Brute force: the unique residue x with x - pi x = s mod pi^n.
                std::vector<Point> solutions;
                for (const auto& x : residues(q, n))
                    if (sub_mod(x, shift(x, n), n, spec) == Point({s}, q)) solutions.push_back(x);
                REQUIRE(solutions.size() == 1);
                CHECK(geometric_point(s, n, spec) == solutions.front());
            }
        }
    }
}

TEST_CASE("digit orderings") {
    const auto ord = DigitOrdering::from_sequence(std::vector<Digit>{2, 0, 1});
    CHECK(ord.digit_at(0) == 2);
    CHECK(ord.rank(2) == 0);
    CHECK(ord.rank(1) == 2);
    CHECK(ord == DigitOrdering(std::vector<Digit>{1, 2, 0}));
    CHECK(DigitOrdering::identity(4).rank(3) == 3);
    CHECK_THROWS_AS(DigitOrdering(std::vector<Digit>{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(DigitOrdering(std::vector<Digit>{0, 3, 1}), std::invalid_argument);
}
