#include "uk/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "uk/acceptance.hpp"
#include "uk/discrepancy.hpp"
#include "uk/fourier.hpp"
#include "uk/koksma.hpp"
#include "uk/literal.hpp"
#include "uk/variation.hpp"

namespace uk {

namespace {

using Json = nlohmann::ordered_json;

void put_rational(Json& obj, const std::string& key, const Rational& r) {
    obj[key] = to_string(r);
    obj[key + "_decimal"] = round12(to_double(r));
}

void put_value(Json& obj, const std::string& key, const FuncValue& v) {
    if (v.is_exact()) put_rational(obj, key, v.exact());
    else obj[key] = round12(v.to_double());
}

void print(std::ostream& out, const Json& obj) { out << obj.dump(2) << '\n'; }

struct Common {
    int q = 0;
    std::string mode = "padic";
    std::optional<int> level;
    std::string ordering;

    RingSpec spec() const { return RingSpec(q, parse_arithmetic(mode)); }
};

void add_ring_options(CLI::App* cmd, Common& common, bool with_level) {
    cmd->add_option("--q", common.q, "residue field size")->required();
    cmd->add_option("--mode", common.mode, "padic or powerseries")->capture_default_str();
    if (with_level) cmd->add_option("--level", common.level, "truncation level n");
}

Json function_header(const LCFunction& f) {
    Json obj;
    obj["q"] = f.q();
    obj["mode"] = std::string(to_string(f.spec().mode()));
    obj["level"] = f.level();
    obj["truncation"] = std::string(to_string(f.truncation()));
    return obj;
}

Json inequality_json(const KoksmaInequality& inequality) {
    Json obj;
    put_value(obj, "variation", inequality.variation);
    put_value(obj, "constant", inequality.constant);
    put_value(obj, "bound", inequality.bound);
    obj["holds"] = inequality.holds;
    return obj;
}

/// Largest n with q^n <= 2^17, so the Fourier table stays small.
int default_sweep_level(int q) {
    int n = 0;
    std::uint64_t size = 1;
    while (size * static_cast<std::uint64_t>(q) <= (1u << 17)) {
        size *= static_cast<std::uint64_t>(q);
        ++n;
    }
    return n;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Variation, discrepancy and Koksma bounds on local-field rings of integers", "uk"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "uk 1.0");

    std::string func;
    std::string points;
    bool no_fourier = false;

    Common var;
    auto* variation = app.add_subcommand("variation", "Taibleson, Beer and Berkovich variations of a function");
    variation->add_option("--func", func, "function literal (JSON)")->required();
    add_ring_options(variation, var, true);
    variation->add_option("--ordering", var.ordering, "rank of each digit, e.g. 2,0,1");

    Common disc;
    auto* discrepancy_cmd = app.add_subcommand("discrepancy", "exact disc discrepancy of a point set");
    discrepancy_cmd->add_option("--points", points, "point file or grid:T, thm36:M:T, random:N:depth:seed")->required();
    add_ring_options(discrepancy_cmd, disc, false);

    Common four;
    std::string dump;
    auto* fourier = app.add_subcommand("fourier", "Fourier coefficients and Fourier-analytic variation");
    fourier->add_option("--func", func, "function literal (JSON)")->required();
    add_ring_options(fourier, four, true);
    fourier->add_option("--dump-coeffs", dump, "write index,level,re,im,abs CSV to this file ('-' for stdout)");

    Common kok;
    auto* koksma = app.add_subcommand("koksma", "QMC error against the three Koksma bounds");
    koksma->add_option("--func", func, "function literal (JSON)")->required();
    koksma->add_option("--points", points, "point file or grid:T, thm36:M:T, random:N:depth:seed")->required();
    add_ring_options(koksma, kok, true);
    koksma->add_option("--ordering", kok.ordering, "rank of each digit, e.g. 2,0,1");
    koksma->add_flag("--no-fourier", no_fourier, "skip the Fourier bound (needed for composite q)");

    Common swp;
    std::string t_range;
    std::string center = "0";
    auto* sweep = app.add_subcommand("sweep", "Koksma constants of |x - c|^t across t, as CSV");
    add_ring_options(sweep, swp, true);
    sweep->add_option("--t-range", t_range, "a:b:step")->required();
    sweep->add_option("--c", center, "center c as a digit list")->capture_default_str();
    sweep->add_option("--ordering", swp.ordering, "rank of each digit, e.g. 2,0,1");
    sweep->add_flag("--no-fourier", no_fourier, "skip the Fourier columns");

    Common anti;
    int M = 0, T = 0;
    auto* anti_koksma = app.add_subcommand("anti-koksma", "alternating function against the grid-plus-swaps set");
    add_ring_options(anti_koksma, anti, false);
    anti_koksma->add_option("--M", M, "number of alternating discs / 2")->required();
    anti_koksma->add_option("--T", T, "grid depth, T >= 2M")->required();

    auto* reproduce = app.add_subcommand("reproduce", "run the acceptance suite and print a pass/fail table");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (*variation) {
            const auto f = parse_function_literal(func, var.spec(), var.level);
            const auto report = variation_report(f, parse_ordering(var.ordering, f.q()));
            Json obj = function_header(f);
            put_value(obj, "taibleson", report.taibleson);
            put_value(obj, "beer", report.beer);
            put_value(obj, "berkovich", report.berkovich);
            print(out, obj);
        } else if (*discrepancy_cmd) {
            disc.spec();
            const auto set = load_points(points, disc.q);
            Json obj;
            obj["q"] = set.q();
            obj["N"] = set.size();
            obj["max_depth"] = set.max_depth();
            put_rational(obj, "delta", discrepancy(set));
            print(out, obj);
        } else if (*fourier) {
            const auto f = parse_function_literal(func, four.spec(), four.level);
            const auto table = fourier_coefficients(f);
            if (dump == "-") {
                write_fourier_csv(out, table);
                return 0;
            }
            if (!dump.empty()) {
                std::ofstream file(dump);
                if (!file) throw std::invalid_argument("cannot write '" + dump + "'");
                write_fourier_csv(file, table);
            }
            Json obj = function_header(f);
            obj["characters"] = table.group.size();
            put_value(obj, "integral", f.integral());
            obj["fourier"] = round12(fourier_variation(table));
            print(out, obj);
        } else if (*koksma) {
            const auto f = parse_function_literal(func, kok.spec(), kok.level);
            const auto set = load_points(points, kok.q);
            const auto report = koksma_check(f, set, parse_ordering(kok.ordering, kok.q), !no_fourier);
            Json obj = function_header(f);
            obj["N"] = set.size();
            put_value(obj, "lhs", report.lhs);
            put_rational(obj, "delta", report.delta);
            obj["beer"] = inequality_json(report.beer);
            obj["berkovich"] = inequality_json(report.berkovich);
            if (report.fourier) obj["fourier"] = inequality_json(*report.fourier);
            obj["all_hold"] = report.all_hold();
            print(out, obj);
        } else if (*sweep) {
            const auto spec = swp.spec();
            const int level = swp.level.value_or(default_sweep_level(spec.q()));
            const auto ts = parse_t_range(t_range);
            SweepOptions options;
            options.with_fourier = !no_fourier;
            const auto rows = constant_sweep(parse_point(center, spec.q()), ts, spec, level,
                                             parse_ordering(swp.ordering, spec.q()), options);
            write_sweep_csv(out, rows, options.with_fourier);
        } else if (*anti_koksma) {
            const auto r = anti_koksma_demo(M, T, anti.spec());
            Json obj;
            obj["q"] = anti.q;
            obj["M"] = M;
            obj["T"] = T;
            put_rational(obj, "v_taib", r.v_taib);
            put_rational(obj, "delta", r.delta);
            put_rational(obj, "lhs", r.lhs);
            put_rational(obj, "ratio", r.ratio);
            print(out, obj);
        } else if (*reproduce) {
            const auto results = run_acceptance();
            print_acceptance(out, results);
            const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace uk
