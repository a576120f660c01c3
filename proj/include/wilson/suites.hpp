#pragma once

#include "wilson/engine.hpp"
#include "wilson/fixtures.hpp"

#include <string>
#include <vector>

namespace wilson {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

struct SuiteOptions {
    std::string fixture_dir; // empty: use the builtin corpus
    int threads = 1;
    Strategy strategy = Strategy::boundary;
};

// vanishing, edge-independence, table1, winding, series, spectrum.
const std::vector<std::string>& suite_names();

// `name` may also be "all".  Unknown names throw ParseError.
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt = {});

SuiteReport suite_vanishing(const SuiteOptions& opt = {});
SuiteReport suite_edge_independence(const SuiteOptions& opt = {});
SuiteReport suite_table1(const SuiteOptions& opt = {});
SuiteReport suite_winding(const SuiteOptions& opt = {});
SuiteReport suite_series(const SuiteOptions& opt = {});
SuiteReport suite_spectrum(const SuiteOptions& opt = {});

} // namespace wilson
