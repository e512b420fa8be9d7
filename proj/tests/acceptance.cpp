#include <cstdio>
#include <exception>

#include "subduction/verify.hpp"

using namespace subduction;

int main() {
    int failed = 0;
    for (const auto& c : run_suite("all")) {
        const bool ok = c.passed();
        if (!ok) ++failed;
        std::printf("criterion %d %s: %s (%.2f s", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), c.seconds);
        if (c.time_limit > 0) std::printf(", limit %.0f s", c.time_limit);
        std::printf(")\n");
        for (const auto& k : c.checks) {
            const char* tag = k.passed ? "ok  " : (k.required ? "FAIL" : "note");
            std::printf("    %s %s: %s\n", tag, k.name.c_str(), k.detail.c_str());
        }
    }
    std::printf("%d of 7 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
