#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sunit {

struct CheckResult {
    std::string id;       // "1".."11", "6L"
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

struct VerifyOptions {
    unsigned workers = 0;        // 0 = hardware concurrency
    uint64_t seed = 42;          // property-suite randomness
    long precision_ceiling = 1000000;  // digits
    bool enforce_time_limits = true;
};

// One acceptance criterion ("1".."11", plus the long-running "6L").
CheckResult verify_criterion(const std::string& id, const VerifyOptions& opt = {});

// Criterion ids in order, excluding the optional long scan.
std::vector<std::string> default_criteria();

// Named batteries: theorem3, theorem58, theorem59, theorem71, theorem61,
// modlog, sieve, cf, bd, properties, all.
std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opt = {});

}  // namespace sunit
