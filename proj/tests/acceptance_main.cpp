// Acceptance runner: one pass/fail line per criterion, detail lines on
// failure. --criterion N selects one criterion; --tier slow unlocks the
// larger exponent set. Exit 0 iff everything requested passed.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "gaudin/acceptance.hpp"

int main(int argc, char** argv) {
    int only = 0;
    bool slow = false;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (arg == "--tier" && i + 1 < argc) {
            std::string tier = argv[++i];
            if (tier == "slow") {
                slow = true;
            } else if (tier != "fast") {
                std::fprintf(stderr, "unknown tier: %s\n", tier.c_str());
                return 2;
            }
        } else {
            std::fprintf(stderr, "usage: acceptance_tests [--criterion N] [--tier fast|slow]\n");
            return 2;
        }
    }

    std::vector<int> ids = only ? std::vector<int>{only} : gaudin::criterion_ids();
    bool all = true;
    for (int id : ids) {
        gaudin::CriterionResult r;
        try {
            r = gaudin::run_criterion(id, slow);
        } catch (const std::exception& e) {
            r.id = id;
            r.name = "aborted by exception";
            r.pass = false;
            r.details = {std::string("FAIL ") + e.what()};
        }
        std::printf("%s\n", gaudin::render_result_line(r).c_str());
        if (!r.pass)
            for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
