// Acceptance harness: one pass/fail line per criterion; exit 0 iff all pass.
#include <cstdio>
#include <cstring>
#include <string>

#include "digitsum/accept.hpp"

int main(int argc, char** argv) {
    std::string fixtures = "fixtures";
    int jobs = 1;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fixtures") == 0 && i + 1 < argc)
            fixtures = argv[++i];
        else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
            jobs = std::atoi(argv[++i]);
    }
    auto results = digitsum::run_acceptance(fixtures, jobs);
    for (const auto& r : results)
        std::printf("%s criterion %d [%s] %s (%.1fs)\n",
                    r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
    return digitsum::all_passed(results) ? 0 : 1;
}
