// Acceptance binary: one PASS/FAIL line per criterion; non-zero exit if any fail.

#include "coreentropy/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    ce::VerifyOptions opt;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    int failed = 0;
    ce::run_acceptance(opt, ids, [&](const ce::CriterionResult& r) {
        failed += !r.pass;
        std::printf("criterion %2d %s: %s (%.2f s) %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
    });
    return failed == 0 ? 0 : 1;
}
