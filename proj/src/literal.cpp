#include "uk/literal.hpp"

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace uk {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw std::invalid_argument("function literal: " + message); }

void allow_keys(const json& literal, std::initializer_list<std::string_view> keys) {
    for (const auto& [key, value] : literal.items()) {
        bool known = false;
        for (auto k : keys) known = known || key == k;
        if (!known) fail("unexpected key '" + key + "'");
    }
}

const json& require(const json& literal, const char* key) {
    const auto it = literal.find(key);
    if (it == literal.end()) fail(std::string("missing key '") + key + "'");
    return *it;
}

int as_int(const json& value, const char* key) {
    if (!value.is_number_integer()) fail(std::string("'") + key + "' must be an integer");
    return value.get<int>();
}

std::string as_string(const json& value, const char* key) {
    if (!value.is_string()) fail(std::string("'") + key + "' must be a string");
    return value.get<std::string>();
}

std::optional<int> literal_level(const json& literal, std::optional<int> fallback) {
    if (const auto it = literal.find("level"); it != literal.end()) return as_int(*it, "level");
    return fallback;
}

int need_level(std::optional<int> level, const char* kind) {
    if (!level) fail(std::string(kind) + " needs a level");
    if (*level < 0) fail("level must be >= 0");
    return *level;
}

FuncValue table_value(const json& value) {
    if (value.is_number_integer()) return FuncValue(Rational(value.get<long long>()));
    if (value.is_number_float()) return FuncValue(value.get<double>());
    if (value.is_string()) return FuncValue(parse_rational(value.get<std::string>()));
    fail("table values must be numbers or \"p/q\" strings");
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto end = text.find(sep, start);
        parts.push_back(text.substr(start, end - start));
        if (end == std::string_view::npos) return parts;
        start = end + 1;
    }
}

long long parse_integer(std::string_view text, const std::string& what) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("bad integer '" + std::string(text) + "' in " + what);
    return value;
}

}  // namespace

LCFunction parse_function_literal(const std::string& text, const RingSpec& spec, std::optional<int> level) {
    json literal;
    try {
        literal = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("not valid JSON: ") + e.what());
    }
    if (!literal.is_object()) fail("must be a JSON object");
    const std::string kind = as_string(require(literal, "kind"), "kind");
    const auto chosen = literal_level(literal, level);

    if (kind == "indicator") {
        allow_keys(literal, {"kind", "disc", "level"});
        const Disc disc = parse_disc(as_string(require(literal, "disc"), "disc"), spec.q());
        return chosen ? indicator(spec, disc, *chosen) : indicator(spec, disc);
    }
    if (kind == "abs_power") {
        allow_keys(literal, {"kind", "c", "t", "mode", "level"});
        const Point c = parse_point(as_string(require(literal, "c"), "c"), spec.q());
        const auto& t = require(literal, "t");
        if (!t.is_number()) fail("'t' must be a number");
        if (!(t.get<double>() > 0.0)) fail("'t' must be > 0");
        AbsPowerMode mode = AbsPowerMode::average;
        if (const auto it = literal.find("mode"); it != literal.end()) {
            const auto name = as_string(*it, "mode");
            if (name == "sample") mode = AbsPowerMode::sample;
            else if (name != "average") fail("mode must be 'average' or 'sample'");
        }
        return abs_power(spec, c, t.get<double>(), need_level(chosen, "abs_power"), mode);
    }
    if (kind == "alternating") {
        allow_keys(literal, {"kind", "weights", "M", "level"});
        const auto weights = as_string(require(literal, "weights"), "weights");
        if (weights == "harmonic") {
            if (literal.contains("M")) fail("'M' applies to unit weights only");
            return alternating_function(spec, need_level(chosen, "harmonic alternating"), AlternatingWeights::harmonic);
        }
        if (weights != "unit") fail("weights must be 'harmonic' or 'unit'");
        const int M = as_int(require(literal, "M"), "M");
        if (M < 1) fail("'M' must be >= 1");
        return alternating_function(spec, chosen.value_or(2 * M + 1), AlternatingWeights::unit, M);
    }
    if (kind == "table") {
        allow_keys(literal, {"kind", "level", "values"});
        const int n = need_level(chosen, "table");
        const auto& values = require(literal, "values");
        if (!values.is_array()) fail("'values' must be an array");
        std::vector<FuncValue> cells;
        cells.reserve(values.size());
        for (const auto& v : values) cells.push_back(table_value(v));
        if (cells.size() != checked_power(spec.q(), n))
            fail("table needs q^level = " + std::to_string(checked_power(spec.q(), n)) + " values, got " +
                 std::to_string(cells.size()));
        return LCFunction::from_table(spec, n, cells);
    }
    fail("unknown kind '" + kind + "'");
}

PointSet load_points(const std::string& source, int q) {
    const auto parts = split(source, ':');
    const auto arg = [&](std::size_t i) { return parse_integer(parts[i], "point source '" + source + "'"); };
    if (parts[0] == "grid" && parts.size() == 2) return full_grid(q, static_cast<int>(arg(1)));
    if (parts[0] == "thm36" && parts.size() == 3)
        return thm36_set(q, static_cast<int>(arg(1)), static_cast<int>(arg(2)));
    if (parts[0] == "random" && parts.size() == 4) {
        const auto count = arg(1);
        if (count < 1) throw std::invalid_argument("random point set needs N >= 1");
        return random_set(q, static_cast<std::size_t>(count), static_cast<int>(arg(2)),
                          static_cast<std::uint64_t>(arg(3)));
    }
    std::ifstream in(source);
    if (!in) throw std::invalid_argument("cannot open point file '" + source + "'");
    return read_point_set(in, q);
}

DigitOrdering parse_ordering(const std::string& text, int q) {
    if (text.empty()) return DigitOrdering::identity(q);
    auto perm = parse_digit_list(text, q);
    if (static_cast<int>(perm.size()) != q)
        throw std::invalid_argument("ordering must list the rank of each of the " + std::to_string(q) + " digits");
    return DigitOrdering(std::move(perm));
}

}  // namespace uk
