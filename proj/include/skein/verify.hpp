// End-to-end verification of the documented slide-relation computations:
// the recursive expansions, the slide images of the four-strand identity,
// the variant difference, the six two-strand relations, the mirror
// combination and its reduction, the glued values in the shipped
// genus-2 # genus-1 scenario, and the ideal membership obstruction.
#pragma once

#include <string>
#include <vector>

namespace skein {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

const std::vector<std::string>& verification_check_names();

// Runs the named checks (all when `only` is empty).  Throws
// std::invalid_argument for an unknown check name.
std::vector<CheckResult> run_verification(const std::vector<std::string>& only = {});

}  // namespace skein
