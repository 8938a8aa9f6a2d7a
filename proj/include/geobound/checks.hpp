#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace geobound {

struct CheckResult {
    std::string id;
    std::string claim;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Report {
    std::vector<CheckResult> checks;
    uint64_t fingerprint = 0;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
};

struct PipelineOptions {
    // Test hook: mis-targets one blue pairing rule so that downstream checks
    // fail instead of passing.
    bool corrupt_pairing = false;
};

// Runs the whole construction (24-cell -> mirrored complex -> R -> boundary
// components -> triangulations -> X) and evaluates every check in a fixed
// upstream-to-downstream order. Construction errors surface as failed checks,
// never as exceptions.
Report run_pipeline(const PipelineOptions& options = {});

// Check ids with one-line claims, in report order.
std::vector<std::pair<std::string, std::string>> list_checks();

std::string render_text(const Report& r);
std::string render_json(const Report& r);

// Writes one of the pipeline triangulations ("large", "small",
// "example-doubled") in the triangulation text format. Throws on an unknown
// selector or an unwritable path.
void export_triangulation(const std::string& which, const std::string& path);

} // namespace geobound
