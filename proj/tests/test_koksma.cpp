#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "uk/fourier.hpp"
#include "uk/koksma.hpp"
#include "uk/variation.hpp"

using namespace uk;

TEST_CASE("qmc error") {
    for (int q : {2, 3}) {
        const RingSpec spec(q, Arithmetic::padic);
        RandomFunctionOptions options;
        options.integer_valued = true;
        for (int n = 0; n <= 3; ++n) {
            const auto f = random_lc(spec, n, 40 + static_cast<std::uint64_t>(n), options);
            CHECK(qmc_error(f, full_grid(q, 3)).exact() == 0);
        }
        const auto constant = LCFunction::constant(spec, FuncValue(Rational(5, 7)), 2);
        CHECK(qmc_error(constant, random_set(q, 17, 4, 1)).exact() == 0);
    }
    const RingSpec spec(2, Arithmetic::padic);
    const auto f = indicator(spec, parse_disc("1:1", 2));
    CHECK(qmc_error(f, PointSet(2, {parse_point("1", 2)})).exact() == Rational(1, 2));
}

TEST_CASE("verdict slack") {
    CHECK(bound_holds(FuncValue(Rational(1, 3)), FuncValue(Rational(1, 3))));
    CHECK_FALSE(bound_holds(FuncValue(Rational(1, 3) + Rational(1, 1000000000) / 1000000), FuncValue(Rational(1, 3))));
    CHECK(bound_holds(FuncValue(1.0 + 5e-13), FuncValue(1.0)));
    CHECK_FALSE(bound_holds(FuncValue(1.0 + 1e-11), FuncValue(1.0)));
}

TEST_CASE("anti-Koksma construction") {
    struct Case {
        int q, M, T;
    };
    for (const auto& [q, M, T] : {Case{2, 1, 2}, Case{2, 3, 8}, Case{3, 2, 6}, Case{2, 5, 10}}) {
        for (auto mode : {Arithmetic::padic, Arithmetic::power_series}) {
            const auto r = anti_koksma_demo(M, T, RingSpec(q, mode));
            CHECK(r.v_taib == 2);
            CHECK(r.delta == inverse_power(q, T));
            CHECK(r.lhs == 2 * M * inverse_power(q, T));
            CHECK(r.ratio == 2 * M);
        }
    }
    CHECK_THROWS_AS(anti_koksma_demo(3, 5, RingSpec(2, Arithmetic::padic)), std::invalid_argument);
}

TEST_CASE("koksma check on the grid example") {
    const RingSpec spec(3, Arithmetic::padic);
    const auto f = abs_power(spec, Point(), 1.0, 8);
    const auto report = koksma_check(f, full_grid(3, 4), DigitOrdering::identity(3));
    CHECK(report.delta == Rational(1, 81));
    CHECK(report.beer.holds);
    CHECK(report.berkovich.holds);
    REQUIRE(report.fourier.has_value());
    CHECK(report.fourier->holds);
    CHECK(report.all_hold());
    CHECK(report.beer.constant.to_double() == doctest::Approx(6 * report.beer.variation.to_double()));
    CHECK(report.berkovich.constant.to_double() == doctest::Approx(4.0 / 3 * report.berkovich.variation.to_double()));

    const auto constant = koksma_check(LCFunction::constant(spec, FuncValue(2), 3), random_set(3, 9, 2, 4),
                                       DigitOrdering::identity(3));
    CHECK(constant.lhs.exact() == 0);
    CHECK(constant.all_hold());

    const auto composite = LCFunction::constant(RingSpec(4, Arithmetic::power_series), FuncValue(1), 1);
    CHECK_THROWS_AS(koksma_check(composite, full_grid(4, 1), DigitOrdering::identity(4)), std::invalid_argument);
    CHECK_FALSE(koksma_check(composite, full_grid(4, 1), DigitOrdering::identity(4), false).fourier.has_value());
}

TEST_CASE("koksma inequalities and the recursion identity on random pairs") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const int q = 2 + static_cast<int>(seed % 2);
        const RingSpec spec(q, seed % 3 == 0 ? Arithmetic::power_series : Arithmetic::padic);
        RandomFunctionOptions options;
        options.integer_valued = seed % 2 == 0;
        options.lo = -4;
        options.hi = 4;
        const auto f = random_lc(spec, 1 + static_cast<int>(seed % 4), seed, options);
        const auto X = random_set(q, 1 + seed % 60, static_cast<int>(seed % 5), seed * 7 + 1);
        const auto report = koksma_check(f, X, DigitOrdering::identity(q));
        REQUIRE(report.all_hold());
        CHECK(berkovich_recursion_gap(f, X) <= 1e-10);
    }
}

TEST_CASE("closed forms") {
    CHECK(berkovich_closed_form(3, 1.0) == doctest::Approx(1.5));
    CHECK(fourier_closed_form(3, 2.0) == doctest::Approx(9.0 * 8 * 2 / (26 * 2)));
    CHECK_THROWS_AS(fourier_tail(3, 1.0, 5), std::invalid_argument);
    CHECK(fourier_tail(3, 2.0, 10) < fourier_tail(3, 2.0, 5));
    CHECK(distance_to_constant_point(Point(), 0, 3) == 0);
    CHECK(distance_to_constant_point(parse_point("2,2,1", 3), 2, 3) == Rational(1, 9));
    CHECK(distance_to_constant_point(parse_point("1", 3), 0, 3) == 1);
    const auto id = DigitOrdering::identity(3);
    CHECK(beer_closed_form(Point(), 1.0, id) == doctest::Approx(1.0));
    CHECK(beer_closed_form(parse_point("1", 3), 1.0, id) == doctest::Approx(2.0));
}

TEST_CASE("constant sweep") {
    const auto ts = parse_t_range("0.25:4:0.25");
    REQUIRE(ts.size() == 16);
    for (int q : {2, 3}) {
        const RingSpec spec(q, Arithmetic::padic);
        const auto rows = constant_sweep(Point(), ts, spec, 8, DigitOrdering::identity(q));
        REQUIRE(rows.size() == ts.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            CHECK(row.t == ts[i]);
            CHECK(row.c_berk < row.c_beer_closed);
            CHECK(row.c_beer_closed == doctest::Approx(2.0 * q));
            CHECK(row.c_beer_trunc <= row.c_beer_closed + 1e-12);
            CHECK(row.c_fourier_closed.has_value() == (row.t > 1));
            CHECK_FALSE(row.argmin.empty());
        }
    }
    CHECK_THROWS_AS(constant_sweep(Point(), {0.0}, RingSpec(2, Arithmetic::padic), 3, DigitOrdering::identity(2)),
                    std::invalid_argument);
    for (int q : {2, 3, 5}) {
        const RingSpec spec(q, Arithmetic::padic);
        const auto row = constant_sweep(Point(), {8.0}, spec, 5, DigitOrdering::identity(q))[0];
        REQUIRE(row.c_fourier_closed.has_value());
        CHECK(std::abs(*row.c_fourier_closed - (q - 1)) <= 0.01 * (q - 1));
        CHECK((row.c_berk < *row.c_fourier_closed) == (q != 2));
    }
}

TEST_CASE("sweep output does not depend on the thread count") {
    const RingSpec spec(3, Arithmetic::power_series);
    const auto ts = parse_t_range("0.5:3:0.5");
    const auto c = parse_point("2,1", 3);
    std::string outputs[3];
    unsigned counts[3] = {1, 2, 7};
    for (int i = 0; i < 3; ++i) {
        SweepOptions options;
        options.threads = counts[i];
        std::ostringstream out;
        write_sweep_csv(out, constant_sweep(c, ts, spec, 6, DigitOrdering::identity(3), options), true);
        outputs[i] = out.str();
    }
    CHECK(outputs[0] == outputs[1]);
    CHECK(outputs[0] == outputs[2]);
    CHECK(outputs[0].substr(0, outputs[0].find('\n')) == "t,C_Beer_closed,C_Beer_trunc,C_Berk,C_Fourier_trunc,C_Fourier_closed");

    std::ostringstream plain;
    write_sweep_csv(plain, constant_sweep(c, {1.0}, spec, 4, DigitOrdering::identity(3), {false, 1}), false);
    CHECK(plain.str().substr(0, plain.str().find('\n')) == "t,C_Beer_closed,C_Beer_trunc,C_Berk");
}

TEST_CASE("thread count from the environment") {
    setenv("UK_THREADS", "3", 1);
    CHECK(default_thread_count() == 3);
    setenv("UK_THREADS", "zero", 1);
    CHECK(default_thread_count() >= 1);
    unsetenv("UK_THREADS");
    CHECK(default_thread_count() >= 1);
}

TEST_CASE("t ranges") {
    CHECK(parse_t_range("1:2:0.5") == std::vector<double>{1.0, 1.5, 2.0});
    CHECK(parse_t_range("0.1:0.3:0.1").size() == 3);
    CHECK(parse_t_range("2:2:1") == std::vector<double>{2.0});
    CHECK_THROWS_AS(parse_t_range("1:2:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_t_range("2:1:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_t_range("1:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_t_range("a:b:c"), std::invalid_argument);
}
