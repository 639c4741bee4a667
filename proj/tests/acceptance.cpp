// Acceptance suite: runs every criterion and prints one pass/fail line each.
// Exit code 0 when all selected criteria pass, 1 otherwise.
//
//   acceptance [--only ID]... [--long] [--workers N] [--no-time-limits]

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "sunit/verify.hpp"

int main(int argc, char** argv) {
    sunit::VerifyOptions opt;
    std::vector<std::string> ids;
    bool with_long = false;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) {
            ids.push_back(argv[++i]);
        } else if (arg == "--long") {
            with_long = true;
        } else if (arg == "--workers" && i + 1 < argc) {
            opt.workers = static_cast<unsigned>(std::stoul(argv[++i]));
        } else if (arg == "--no-time-limits") {
            opt.enforce_time_limits = false;
        } else {
            std::fprintf(stderr,
                         "usage: acceptance [--only ID]... [--long] [--workers N] [--no-time-limits]\n");
            return 2;
        }
    }
    if (ids.empty()) {
        ids = sunit::default_criteria();
        if (with_long) ids.push_back("6L");
    }

    bool all_pass = true;
    for (const auto& id : ids) {
        const auto res = sunit::verify_criterion(id, opt);
        all_pass = all_pass && res.pass;
        std::printf("%s [%s] %s (%.2fs)%s%s\n", res.pass ? "PASS" : "FAIL", res.id.c_str(),
                    res.name.c_str(), res.seconds, res.details.empty() ? "" : " -- ",
                    res.details.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all_pass ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
    return all_pass ? 0 : 1;
}
