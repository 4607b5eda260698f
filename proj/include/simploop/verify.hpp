#ifndef SIMPLOOP_VERIFY_HPP
#define SIMPLOOP_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simploop/jsonio.hpp"

namespace simploop {

enum class CheckStatus { Pass, Fail, Inconclusive };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    bool mandatory = true;
    std::string detail;
};

struct VerifyConfig {
    std::uint64_t seed = 7;
    std::optional<std::string> input_text; // overrides the bundled corpus where meaningful
    std::string input_name = "input";
    int max_len = -1; // -1 keeps per-check defaults
    int max_dim = -1;
    long long budget = 100000;
    int workers = 1;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool has_fail() const;
    bool has_mandatory_inconclusive() const;
    /// 0 all pass, 1 assertion failure, 2 mandatory check inconclusive.
    int exit_code() const;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg);

std::string report_to_text(const SuiteReport& r);
Json report_to_json(const SuiteReport& r);

} // namespace simploop

#endif
