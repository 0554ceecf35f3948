#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharecalc/oracle/properties.hpp"

namespace sharecalc::oracle {

// One enumerated property: the terms it ranges over and the per-term check.
struct SuiteEntry {
    std::string id;
    Language lang;
    bool simplified;  // Bang terms without der
    std::uint32_t default_size;
    Check check;
};

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// left-inverse, simulation, inverse, nf-preservation, nf-adequacy,
// subject-reduction, confluence, bisimulation, postponement, sn,
// sn-simulation, weak, bang, logic
std::vector<std::string> suite_names();
std::vector<SuiteEntry> suite_entries(const std::string& suite);

// Runs an entry over all enumerated terms up to `size`.
PropertyReport run_entry(const SuiteEntry& e, std::uint32_t size);

}  // namespace sharecalc::oracle
