#pragma once

// Verification suites run by `qsa verify` and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

#include "qsa/algebra.hpp"

namespace qsa {

Report identity_checks();
/// The nine factor maps are well defined and land in domains.
Report quotient_checks(std::uint64_t seed = 1);
Report spectrum_checks();
Report aut_checks(int samples = 25, std::uint64_t seed = 1);
Report gwa_checks(int trials = 100, int iso_trials = 200, std::uint64_t seed = 1);
Report weight_module_checks();
Report unfaithful_checks();
Report center_checks();
Report growth_checks();
Report l_normal_checks(int samples = 50, std::uint64_t seed = 1);

/// identities, spectrum, aut, gwa, modules.
std::vector<std::string> suite_names();
/// "all" runs every suite in order. Throws std::invalid_argument otherwise.
std::vector<Report> run_suite(const std::string& name);

}  // namespace qsa
