#include <algorithm>
#include <iostream>

#include "uk/acceptance.hpp"

int main() {
    const auto results = uk::run_acceptance();
    uk::print_acceptance(std::cout, results);
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    return ok ? 0 : 1;
}
