#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uk/discrepancy.hpp"
#include "uk/funcspace.hpp"
#include "uk/rational.hpp"
#include "uk/ring.hpp"
#include "uk/value.hpp"

namespace uk {

/// Absolute slack for verdicts that involve floating-point values.
inline constexpr double kVerdictSlack = 1e-12;

/// |mean over X of f - integral of f|. Exact when f is rational-valued.
FuncValue qmc_error(const LCFunction& f, const PointSet& points);

/// lhs <= bound, exactly if both are exact, else with kVerdictSlack.
bool bound_holds(const FuncValue& lhs, const FuncValue& bound);

struct KoksmaInequality {
    FuncValue variation;
    FuncValue constant;
    FuncValue bound;
    bool holds = false;
};

struct KoksmaReport {
    FuncValue lhs;
    Rational delta;
    KoksmaInequality beer;       // C = 2q V_Beer
    KoksmaInequality berkovich;  // C = (1 + 1/q) V_Berk
    /// C = V_Fourier; absent when the Fourier branch was not requested.
    std::optional<KoksmaInequality> fourier;

    bool all_hold() const { return beer.holds && berkovich.holds && (!fourier || fourier->holds); }
};

/// The Fourier branch needs prime q and throws otherwise.
KoksmaReport koksma_check(const LCFunction& f, const PointSet& points, const DigitOrdering& ordering,
                          bool with_fourier = true);

/// |x - c| for x the constant digit string (s, s, s, ...).
Rational distance_to_constant_point(const Point& c, Digit s, int q);

/// |alpha - c|^t + |beta - c|^t, the level limit of V_Beer(|x - c|^t).
double beer_closed_form(const Point& c, double t, const DigitOrdering& ordering);

/// 2(q-1)/(q - q^{-t}), the limit of V_Berk(|x - c|^t).
double berkovich_closed_form(int q, double t);

/// q^t (q^t - 1)(q - 1) / ((q^{t+1} - 1)(q^{t-1} - 1)); only meaningful for t > 1.
double fourier_closed_form(int q, double t);

/// V_Fourier of the exact |x|^t minus its level-n partial sum, for t > 1.
double fourier_tail(int q, double t, int n);

struct SweepRow {
    double t = 0.0;
    double c_beer_closed = 0.0;
    double c_beer_trunc = 0.0;
    double c_berk = 0.0;
    double c_fourier_trunc = 0.0;
    /// Present only for t > 1, where the defining series converges.
    std::optional<double> c_fourier_closed;
    /// Smallest of C_Beer_closed, C_Berk and C_Fourier (closed form when
    /// present, truncated otherwise).
    std::string argmin;
};

struct SweepOptions {
    bool with_fourier = true;
    /// 0 means: UK_THREADS if set, else hardware concurrency.
    unsigned threads = 0;
};

/// The three Koksma constants of the AVERAGE truncation of |x - c|^t at the
/// given level, for each t. Rows come back in input order.
std::vector<SweepRow> constant_sweep(const Point& c, const std::vector<double>& t_values, const RingSpec& spec,
                                     int level, const DigitOrdering& ordering, const SweepOptions& options = {});

/// Parses "a:b:step" into a, a + step, ... <= b (inclusive within 1e-9).
std::vector<double> parse_t_range(const std::string& text);

/// CSV: t, C_Beer_closed, C_Beer_trunc, C_Berk, C_Fourier_trunc[, C_Fourier_closed].
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool with_fourier);

struct AntiKoksmaResult {
    Rational v_taib;
    Rational delta;
    Rational lhs;
    Rational ratio;
};

/// UNIT(M) alternating function against the grid-plus-swaps set of depth T.
/// Throws std::invalid_argument when T < 2M.
AntiKoksmaResult anti_koksma_demo(int M, int T, const RingSpec& spec);

/// Largest violation over all discs D with points of
/// E_D = sum_{D' child} E_{D'} + sum_{D' child} (N_{D'} - N_D/q)(f(D') - f(D)),
/// where E_D = sum over x in X cap D of f(x) - f(D).
double berkovich_recursion_gap(const LCFunction& f, const PointSet& points);

/// Threads to use: UK_THREADS if set to a positive integer, else hardware concurrency.
unsigned default_thread_count();

}  // namespace uk
