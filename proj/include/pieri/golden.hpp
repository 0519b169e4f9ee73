#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pieri {

struct GoldenCheck {
    std::string name;
    std::function<bool()> run;
};

// The worked-example suite: pinned values the library is expected to
// reproduce exactly. Deterministic; safe to run repeatedly.
const std::vector<GoldenCheck>& golden_checks();

struct GoldenReport {
    int passed = 0;
    int failed = 0;
    std::vector<std::pair<std::string, bool>> results;
};

GoldenReport run_golden_checks();

}  // namespace pieri
