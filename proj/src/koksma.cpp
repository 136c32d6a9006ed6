#include "uk/koksma.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "uk/fourier.hpp"
#include "uk/variation.hpp"

namespace uk {

FuncValue qmc_error(const LCFunction& f, const PointSet& points) {
    FuncValue sum(0);
    for (const auto& x : points.points()) sum += f.evaluate(x);
    const FuncValue mean = sum / FuncValue(Rational(BigInt(points.size())));
    return abs(mean - f.integral());
}

bool bound_holds(const FuncValue& lhs, const FuncValue& bound) {
    if (lhs.is_exact() && bound.is_exact()) return lhs.exact() <= bound.exact();
    return lhs.to_double() <= bound.to_double() + kVerdictSlack;
}

namespace {

KoksmaInequality make_inequality(const FuncValue& lhs, const Rational& delta, FuncValue variation,
                                 FuncValue factor) {
    KoksmaInequality result;
    result.variation = std::move(variation);
    result.constant = factor * result.variation;
    result.bound = result.constant * FuncValue(delta);
    result.holds = bound_holds(lhs, result.bound);
    return result;
}

}  // namespace

KoksmaReport koksma_check(const LCFunction& f, const PointSet& points, const DigitOrdering& ordering,
                          bool with_fourier) {
    if (points.q() != f.q()) throw std::invalid_argument("function and point set disagree on q");
    const int q = f.q();
    KoksmaReport report;
    report.lhs = qmc_error(f, points);
    report.delta = discrepancy(points);
    report.beer = make_inequality(report.lhs, report.delta, beer_variation(f, ordering), FuncValue(2 * q));
    report.berkovich =
        make_inequality(report.lhs, report.delta, berkovich_variation(f), FuncValue(Rational(q + 1, q)));
    if (with_fourier)
        report.fourier = make_inequality(report.lhs, report.delta, FuncValue(fourier_variation(f)), FuncValue(1));
    return report;
}

Rational distance_to_constant_point(const Point& c, Digit s, int q) {
    if (s >= static_cast<Digit>(q)) throw std::invalid_argument("digit out of range for q");
    if (s == 0 && c.is_zero()) return Rational(0);
    // Past its length c reads 0, so a nonzero s differs there at the latest.
    std::size_t j = 0;
    while (c.digit(j) == s) ++j;
    return inverse_power(q, static_cast<int>(j));
}

double beer_closed_form(const Point& c, double t, const DigitOrdering& ordering) {
    const int q = ordering.q();
    const double a = to_double(distance_to_constant_point(c, ordering.digit_at(0), q));
    const double b = to_double(distance_to_constant_point(c, ordering.digit_at(static_cast<Digit>(q - 1)), q));
    return std::pow(a, t) + std::pow(b, t);
}

double berkovich_closed_form(int q, double t) {
    return 2.0 * (q - 1) / (q - std::pow(static_cast<double>(q), -t));
}

double fourier_closed_form(int q, double t) {
    const double qt = std::pow(static_cast<double>(q), t);
    return qt * (qt - 1.0) * (q - 1) / ((qt * q - 1.0) * (qt / q - 1.0));
}

double fourier_tail(int q, double t, int n) {
    if (t <= 1.0) throw std::invalid_argument("the Fourier series of |x|^t converges only for t > 1");
    const double qd = q;
    const double coefficient = std::pow(qd, t + 1.0) * (std::pow(qd, t) - 1.0) / (std::pow(qd, t + 1.0) - 1.0);
    const double ratio = std::pow(qd, 1.0 - t);
    return (qd - 1.0) * coefficient / qd * std::pow(ratio, n + 1) / (1.0 - ratio);
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("UK_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

SweepRow sweep_row(const Point& c, double t, const RingSpec& spec, int level, const DigitOrdering& ordering,
                   bool with_fourier) {
    const int q = spec.q();
    const auto f = abs_power(spec, c, t, level, AbsPowerMode::average);
    SweepRow row;
    row.t = t;
    row.c_beer_closed = 2.0 * q * beer_closed_form(c, t, ordering);
    row.c_beer_trunc = 2.0 * q * beer_variation(f, ordering).to_double();
    row.c_berk = (1.0 + 1.0 / q) * berkovich_variation(f).to_double();
    double fourier = std::numeric_limits<double>::infinity();
    if (with_fourier) {
        row.c_fourier_trunc = fourier_variation(f);
        fourier = row.c_fourier_trunc;
        if (t > 1.0) {
            row.c_fourier_closed = fourier_closed_form(q, t);
            fourier = *row.c_fourier_closed;
        }
    }
    row.argmin = "C_Beer";
    double best = row.c_beer_closed;
    if (row.c_berk < best) {
        best = row.c_berk;
        row.argmin = "C_Berk";
    }
    if (fourier < best) row.argmin = "C_Fourier";
    return row;
}

}  // namespace

std::vector<SweepRow> constant_sweep(const Point& c, const std::vector<double>& t_values, const RingSpec& spec,
                                     int level, const DigitOrdering& ordering, const SweepOptions& options) {
    for (double t : t_values)
        if (!(t > 0.0)) throw std::invalid_argument("sweep exponents must be > 0");
    if (ordering.q() != spec.q()) throw std::invalid_argument("digit ordering has the wrong q");

    std::vector<SweepRow> rows(t_values.size());
    const unsigned threads =
        std::min<unsigned>(options.threads ? options.threads : default_thread_count(),
                           static_cast<unsigned>(std::max<std::size_t>(1, t_values.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    const auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < t_values.size();) {
            try {
                rows[i] = sweep_row(c, t_values[i], spec, level, ordering, options.with_fourier);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::vector<double> parse_t_range(const std::string& text) {
    double a = 0, b = 0, step = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &a, &b, &step, &tail) != 3)
        throw std::invalid_argument("t range must look like a:b:step, got '" + text + "'");
    if (!(step > 0.0) || b < a) throw std::invalid_argument("t range needs step > 0 and b >= a");
    std::vector<double> values;
    for (long k = 0;; ++k) {
        const double t = a + static_cast<double>(k) * step;
        if (t > b + 1e-9) break;
        values.push_back(t);
    }
    return values;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool with_fourier) {
    out << "t,C_Beer_closed,C_Beer_trunc,C_Berk";
    if (with_fourier) out << ",C_Fourier_trunc,C_Fourier_closed";
    out << '\n';
    char cell[64];
    const auto put = [&](double v) {
        std::snprintf(cell, sizeof cell, "%.12g", round12(v));
        out << cell;
    };
    for (const auto& row : rows) {
        put(row.t);
        for (double v : {row.c_beer_closed, row.c_beer_trunc, row.c_berk}) {
            out << ',';
            put(v);
        }
        if (with_fourier) {
            out << ',';
            put(row.c_fourier_trunc);
            out << ',';
            if (row.c_fourier_closed) put(*row.c_fourier_closed);
        }
        out << '\n';
    }
}

AntiKoksmaResult anti_koksma_demo(int M, int T, const RingSpec& spec) {
    const auto points = thm36_set(spec.q(), M, T);
    const auto f = alternating_function(spec, 2 * M + 1, AlternatingWeights::unit, M);
    AntiKoksmaResult result;
    result.v_taib = taibleson_variation(f).exact();
    result.delta = discrepancy(points);
    result.lhs = qmc_error(f, points).exact();
    result.ratio = result.lhs / result.delta;
    return result;
}

namespace {

struct RecursionChecker {
    const LCFunction& f;
    const PointSet& points;
    double worst = 0.0;

    // Returns E_D for the disc, checking the identity on the way up.
    double visit(const Disc& disc, const std::vector<std::size_t>& inside) {
        const double mean = f.disc_average(disc).to_double();
        double direct = 0.0;
        for (auto i : inside) direct += f.evaluate(points.points()[i]).to_double() - mean;
        if (disc.depth() >= f.level()) return direct;

        const int q = f.q();
        std::vector<std::vector<std::size_t>> split(static_cast<std::size_t>(q));
        for (auto i : inside) split[points.points()[i].digit(static_cast<std::size_t>(disc.depth()))].push_back(i);
        double recursed = 0.0;
        const double share = static_cast<double>(inside.size()) / q;
        for (Digit d = 0; d < static_cast<Digit>(q); ++d) {
            const Disc sub = disc.child(d);
            const auto& members = split[d];
            const double e = members.empty() ? 0.0 : visit(sub, members);
            recursed += e + (static_cast<double>(members.size()) - share) * (f.disc_average(sub).to_double() - mean);
        }
        worst = std::max(worst, std::abs(direct - recursed));
        return direct;
    }
};

}  // namespace

double berkovich_recursion_gap(const LCFunction& f, const PointSet& points) {
    if (points.q() != f.q()) throw std::invalid_argument("function and point set disagree on q");
    std::vector<std::size_t> all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    RecursionChecker checker{f, points};
    checker.visit(Disc(f.q()), all);
    return checker.worst;
}

}  // namespace uk
