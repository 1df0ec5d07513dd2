// Acceptance gate: runs the cross-validation suite and prints one pass/fail
// line per criterion with the measured value and tolerance.
// Usage: acceptance [--level quick|full] [--seed N]

#include <cstdio>
#include <cstring>
#include <string>

#include "bs5/validate.hpp"

int main(int argc, char** argv) {
    std::string level = "full";
    unsigned long long seed = 20260823ULL;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--level") && i + 1 < argc) {
            level = argv[++i];
        } else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) {
            seed = std::stoull(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: acceptance [--level quick|full] [--seed N]\n");
            return 2;
        }
    }
    if (level != "quick" && level != "full") {
        std::fprintf(stderr, "unknown level '%s'\n", level.c_str());
        return 2;
    }

    const auto report = bs5::validate::run_validation(level == "full", seed);
    for (const auto& c : report.checks)
        std::printf("[%s] %-28s measured %.6e tolerance %.6e (%.2fs) %s\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.tolerance,
                    c.runtime_sec, c.detail.c_str());
    std::printf("%s: %zu checks, %s\n", level.c_str(), report.checks.size(),
                report.all_pass() ? "all passed" : "FAILURES PRESENT");
    return report.all_pass() ? 0 : 1;
}
