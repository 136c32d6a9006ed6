#include <doctest.h>

#include <cmath>

#include "uk/funcspace.hpp"
#include "uk/reference.hpp"

using namespace uk;

namespace {

Point P(const char* text, int q) { return parse_point(text, q); }

}  // namespace

TEST_CASE("indicators") {
    const RingSpec spec(3, Arithmetic::padic);
    const auto f = indicator(spec, Disc({1}, 3));
    CHECK(f.level() == 1);
    CHECK(f.integral().exact() == Rational(1, 3));
    CHECK(f.evaluate(P("1,2,2", 3)).exact() == 1);
    CHECK(f.evaluate(P("2,1", 3)).exact() == 0);
    CHECK(f.disc_average(Disc(3)).exact() == Rational(1, 3));

    const auto whole = indicator(spec, Disc(3));
    CHECK(whole.leaf_count() == 1);
    CHECK(whole.integral().exact() == 1);

    const auto deep = indicator(spec, Disc({1}, 3), 4);
    CHECK(deep.level() == 4);
    CHECK(deep.same_values(indicator(spec, Disc({1}, 3), 4)));
    CHECK(deep.leaf_count() == 3);
    CHECK_THROWS_AS(indicator(spec, Disc({1, 2}, 3), 1), std::invalid_argument);
}

TEST_CASE("abs_power cell means") {
    const RingSpec three(3, Arithmetic::padic);
    const auto f = abs_power(three, Point(), 1.0, 5);
    CHECK(f.integral().to_double() == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(f.evaluate(P("0,0,1", 3)).to_double() == doctest::Approx(1.0 / 9));
    CHECK(f.truncation() == Truncation::average);

    // Riemann-sum oracle for the cell [0,0,0], q=2, t=2.
    const RingSpec two(2, Arithmetic::padic);
    const auto g = abs_power(two, Point(), 2.0, 3);
    const double value = g.evaluate(Point()).to_double();
    CHECK(value == doctest::Approx((4.0 / 7.0) / 64.0).epsilon(1e-14));
    const int fine = 12;
    double sum = 0.0;
    const std::uint64_t count = std::uint64_t{1} << (fine - 3);
    for (std::uint64_t i = 1; i < count; ++i) {
        int v = 3;
        for (auto rest = i; rest % 2 == 0; rest /= 2) ++v;
        sum += std::pow(2.0, -2.0 * v);
    }
    CHECK(std::abs(sum / static_cast<double>(count) - value) < 1e-6);

    for (auto mode : {Arithmetic::padic, Arithmetic::power_series}) {
        const RingSpec spec(3, mode);
        const Point c = P("2,1", 3);
        const auto h = abs_power(spec, c, 1.5, 6);
        const double C = 2.0 / (3.0 - std::pow(3.0, -1.5));
        for (int j = 0; j <= 6; ++j) {
            const double expected = C * std::pow(3.0, -1.5 * j);
            CHECK(std::abs(h.disc_average(Disc::around(c, j, 3)).to_double() - expected) <= 1e-12 * expected);
        }
    }
}

TEST_CASE("abs_power sample mode") {
    const RingSpec spec(2, Arithmetic::padic);
    const auto f = abs_power(spec, P("1", 2), 1.0, 4, AbsPowerMode::sample);
    CHECK(f.truncation() == Truncation::sample);
    CHECK(f.evaluate(P("1", 2)).to_double() == 0.0);
    CHECK(f.evaluate(P("1,0,1", 2)).to_double() == doctest::Approx(0.25));
    CHECK(f.evaluate(P("0", 2)).to_double() == 1.0);
}

TEST_CASE("abs_power preconditions") {
    const RingSpec spec(3, Arithmetic::padic);
    CHECK_THROWS_AS(abs_power(spec, Point(), 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(abs_power(spec, Point(), -1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(abs_power(spec, P("1,1,1,1", 3), 1.0, 3), std::invalid_argument);
}

TEST_CASE("alternating functions") {
    const RingSpec spec(3, Arithmetic::padic);
    const auto h = alternating_function(spec, 5, AlternatingWeights::harmonic);
    CHECK(h.evaluate(uniformizer_pow(1)).exact() == Rational(-1, 2));
    CHECK(h.evaluate(uniformizer_pow(0)).exact() == 1);
    CHECK(h.evaluate(Point()).exact() == 0);
    CHECK(h.evaluate(uniformizer_pow(3)).exact() == Rational(-1, 4));
    CHECK_THROWS_AS(alternating_function(spec, 1, AlternatingWeights::harmonic), std::invalid_argument);

    for (int M : {1, 2, 3}) {
        const auto u = alternating_function(spec, 2 * M + 1, AlternatingWeights::unit, M);
        Rational expected = 0;
        for (int k = 0; k < 2 * M; ++k) expected += (k % 2 ? -1 : 1) * inverse_power(3, k + 1);
        CHECK(u.integral().exact() == expected);
    }
    CHECK_THROWS_AS(alternating_function(spec, 4, AlternatingWeights::unit, 2), std::invalid_argument);
    CHECK(alternating_disc(2, 3) == Disc({0, 0, 1}, 3));
}

TEST_CASE("tables round trip and collapse") {
    const RingSpec spec(2, Arithmetic::padic);
    const std::vector<FuncValue> values{1, 1, 1, 1, 2, 2, 3, 4};
    const auto f = LCFunction::from_table(spec, 3, values);
    CHECK(f.cell_values() == values);
    CHECK(f.leaf_count() == 4);
    CHECK(f.evaluate(P("1,1,1", 2)).exact() == 4);
    CHECK(f.evaluate(P("0,1", 2)).exact() == 1);
    CHECK(f.integral().exact() == Rational(15, 8));
    const auto [lo, hi] = f.range(Disc({1}, 2));
    CHECK(lo.exact() == 2);
    CHECK(hi.exact() == 4);
    CHECK(f.constant_on(Disc({0}, 2))->exact() == 1);
    CHECK_FALSE(f.constant_on(Disc({1}, 2)).has_value());
    CHECK(LCFunction::from_table(spec, 2, std::vector<FuncValue>(4, FuncValue(5))).leaf_count() == 1);
    CHECK_THROWS_AS(LCFunction::from_table(spec, 2, values), std::invalid_argument);
}

TEST_CASE("collapsing does not change values") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const RingSpec spec(3, Arithmetic::padic);
        const auto f = random_lc(spec, 3, seed);
        const auto table = f.cell_values();
        const auto g = LCFunction::from_table(spec, 3, table);
        for (std::uint64_t i = 0; i < table.size(); ++i) {
            const auto digits = reference::cell_digits(3, 3, i);
            REQUIRE(f.evaluate(Point(digits, 3)) == table[i]);
            REQUIRE(g.evaluate(Point(digits, 3)) == table[i]);
        }
        CHECK(g.leaf_count() <= f.leaf_count());
    }
}

TEST_CASE("tower property") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const RingSpec spec(2 + static_cast<int>(seed % 2), Arithmetic::padic);
        RandomFunctionOptions options;
        options.integer_valued = true;
        options.lo = -5;
        options.hi = 5;
        const auto f = random_lc(spec, 4, seed, options);
        for (int k = 0; k < 4; ++k)
            for (const auto& D : discs_at_depth(k, spec.q())) {
                FuncValue sum(0);
                for (const auto& c : D.children()) sum += f.disc_average(c);
                REQUIRE(f.disc_average(D).exact() * spec.q() == sum.exact());
            }
    }
}

TEST_CASE("evaluate ignores digits past the level") {
    const RingSpec spec(3, Arithmetic::padic);
    const auto f = random_lc(spec, 2, 3);
    CHECK(f.evaluate(P("1,2", 3)) == f.evaluate(P("1,2,1,1", 3)));
    CHECK(f.evaluate(P("0,2", 3)) == f.evaluate(P("0,2,2", 3)));
}

TEST_CASE("translation") {
    const RingSpec two(2, Arithmetic::padic);
    const auto f = indicator(two, Disc({1}, 2), 2);
    CHECK(translate(f, P("1", 2)).same_values(indicator(two, Disc({0}, 2), 2)));
    CHECK(translate(f, Point()).same_values(f));

    for (auto mode : {Arithmetic::padic, Arithmetic::power_series}) {
        const RingSpec spec(3, mode);
        const auto A = Disc({2, 1}, 3);
        const Point c = P("2,2", 3);
        const Point shifted_center = add_mod(A.center(), c, 2, spec);
        CHECK(translate(indicator(spec, A), c).same_values(indicator(spec, Disc::around(shifted_center, 2, 3))));
    }

    for (auto mode : {Arithmetic::padic, Arithmetic::power_series}) {
        const RingSpec spec(3, mode);
        RandomFunctionOptions options;
        options.integer_valued = true;
        const auto g = random_lc(spec, 3, 17, options);
        for (std::uint64_t i = 0; i < 27; ++i) {
            const auto c = reference::cell_digits(3, 3, i);
            const auto moved = translate(g, Point(c, 3));
            REQUIRE(moved.integral().exact() == g.integral().exact());
            REQUIRE(moved.cell_values() == reference::translate_naive(3, 3, mode, g.cell_values(), c));
        }
    }
}

TEST_CASE("linear combinations and coarsening") {
    const RingSpec spec(3, Arithmetic::padic);
    const auto a = indicator(spec, Disc({1}, 3));
    const auto b = indicator(spec, Disc({1, 2}, 3));
    const std::vector<Term> terms{{FuncValue(2), &a}, {FuncValue(-1), &b}};
    const auto f = linear_combine(terms);
    CHECK(f.level() == 2);
    CHECK(f.evaluate(P("1,2", 3)).exact() == 1);
    CHECK(f.evaluate(P("1,0", 3)).exact() == 2);
    CHECK(f.integral().exact() == Rational(2, 3) - Rational(1, 9));

    const auto g = coarsen(f, 1);
    CHECK(g.level() == 1);
    CHECK(g.evaluate(P("1", 3)).exact() == Rational(5, 3));
    CHECK(g.integral().exact() == f.integral().exact());
    CHECK_THROWS_AS(coarsen(f, 3), std::invalid_argument);
}

TEST_CASE("random functions are reproducible") {
    const RingSpec spec(2, Arithmetic::padic);
    CHECK(random_lc(spec, 4, 99).same_values(random_lc(spec, 4, 99)));
    CHECK_FALSE(random_lc(spec, 4, 99).same_values(random_lc(spec, 4, 100)));
}
