#ifndef DXL_CHECKS_HPP
#define DXL_CHECKS_HPP

#include <string>
#include <vector>

#include "dxl/densities.hpp"

namespace dxl {

// One named verification: a computed value, the value it should take, and the
// tolerance deciding the pass flag.  Tolerances are absolute; relative bounds
// are folded in when a check is built (tol = rel * |expected|).
struct Check {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// A full suite run; all_pass is the conjunction of the member flags.
struct CheckReport {
    std::string suite;
    std::vector<Check> checks;
    bool all_pass = false;
};

// The recognized suite keys, "all" last.
const std::vector<std::string>& check_suites();

// Run one verification family ("specfun", "spinor", "fourier", "sumrules",
// "fields", "threebody") or "all", which concatenates every family with the
// family name prefixed onto each check.  Deterministic: fixed seeds, fixed
// grids.  Throws DomainError for an unknown suite key.
CheckReport run_suite(const std::string& suite, const Constants& c = {});

// Serialize as {"suite": ..., "checks": [{name, computed, expected,
// tolerance, pass}, ...], "all_pass": ...}.
std::string to_json(const CheckReport& report);

}  // namespace dxl

#endif
