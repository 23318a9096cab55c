#include <chrono>
#include <cstdio>

#include "superchar/verify.hpp"

int main() {
    int failed = 0;
    for (int id = 1; id <= 10; ++id) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = superchar::run_criterion(id, 7);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d %-16s %s  checks=%ld  %.2fs  %s%s\n", r.id, r.key.c_str(),
                    r.passed ? "PASS" : "FAIL", r.checks, s, r.title.c_str(),
                    r.passed ? "" : ("  [" + r.detail + "]").c_str());
        std::fflush(stdout);
        failed += !r.passed;
    }
    return failed ? 1 : 0;
}
