#ifndef GBAR_VERIFY_HPP
#define GBAR_VERIFY_HPP

#include <string>
#include <vector>

namespace gbar {

struct SuiteResult {
    std::string name;
    bool passed = false;
    uint64_t checks = 0;
    std::string detail;  // failure descriptions (truncated) or a summary
};

// Registered invariant sweeps, runnable by name ("all" runs everything).
std::vector<std::string> suite_names();

// Throws InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name);

}  // namespace gbar

#endif
