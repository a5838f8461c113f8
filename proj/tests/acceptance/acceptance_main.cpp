// Acceptance gate: runs every criterion, prints one line each with its
// runtime, and exits non-zero if any check or time limit fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>

#include "nessfi/verify/acceptance.hpp"

int main() {
    using nessfi::verify::acceptance_criteria;
    int failures = 0;
    for (const auto& c : acceptance_criteria()) {
        const auto start = std::chrono::steady_clock::now();
        nessfi::verify::CriterionResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {c.id, c.name, false, std::string("threw: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.time_limit_seconds <= 0.0 || secs < c.time_limit_seconds;
        if (!in_time) {
            r.passed = false;
            r.detail += " [time limit exceeded]";
        }
        if (!r.passed) ++failures;

        char timing[64];
        if (c.time_limit_seconds > 0.0) {
            std::snprintf(timing, sizeof timing, " (%.2f s / limit %.0f s)", secs,
                          c.time_limit_seconds);
        } else {
            std::snprintf(timing, sizeof timing, " (%.2f s)", secs);
        }
        std::cout << nessfi::verify::format_result(r) << timing << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : "some criteria FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
