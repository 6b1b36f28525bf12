#pragma once

// Property suites over graph populations, shared by the CLI verify command
// and the acceptance harness. Each suite sweeps its population, evaluates a
// fixed set of inequalities or cross-checks, and reports the worst margin per
// property so a pass is auditable rather than a bare boolean.
//
// Populations: the "exhaustive" leg is every isomorphism-distinct connected
// graph on 2..nmax vertices; the "random" leg is random_count connected
// G(n,p) draws with n in [random_nmin, random_nmax] and p cycling through
// {0.2, 0.4, 0.6}, deterministic in the seed.

#include "indgap/graph.hpp"
#include "indgap/numeric.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace indgap {

struct SuiteOptions {
    int nmax = 8;           // exhaustive population ceiling
    int random_count = 200; // random population size (0 disables that leg)
    int random_nmin = 9;
    int random_nmax = 12;
    int order = 30;       // series truncation for the positivity suite
    int grid = 720;       // theta grid for the majorant suite
    int family_nmax = 30; // path/cycle ceiling; complete bipartite uses 2/3
    std::uint64_t seed = 1;
    int jobs = 1;                // accepted for interface parity; runs are sequential
    std::ostream* log = nullptr; // optional progress/margin stream
};

// Margin convention: >= 0 means the property held on that instance; the
// recorded value is the minimum over all instances, so a negative worst
// margin pinpoints the tightest violation.
struct PropertyMargin {
    std::string name;
    long instances = 0;
    long violations = 0;
    Real worst_margin;
    std::string worst_instance;
};

struct SuiteResult {
    std::string name;
    long instances = 0;  // graphs (or cases) visited
    long violations = 0; // failed property evaluations, summed
    std::vector<PropertyMargin> properties;
    bool pass() const { return violations == 0; }
};

// The runnable suite names, in execution order for "all".
std::vector<std::string> suite_names();

// Runs one named suite; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

// "all" expands to every suite; otherwise a single-element vector.
std::vector<SuiteResult> run_suites(const std::string& name_or_all,
                                    const SuiteOptions& opt);

std::string suite_report_text(const SuiteResult& r);

} // namespace indgap
