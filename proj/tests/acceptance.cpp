// Acceptance suite: evaluates every verification criterion end to end and
// prints one pass/fail line per criterion. Exits nonzero if any fails.
//
// Criterion 14 (byte-identical reports) is exercised against the real CLI
// when GEOBOUND_CLI points at the binary; otherwise it falls back to
// comparing two in-process renderings.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "geobound/checks.hpp"
#include "geobound/quotient.hpp"

using namespace geobound;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %2d [%s] %s - %s\n", number, pass ? "PASS" : "FAIL",
                name.c_str(), detail.c_str());
    if (!pass)
        ++failures;
}

std::string run_cli(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    pclose(pipe);
    return out;
}

const CheckResult* find_check(const Report& r, const std::string& id) {
    for (const CheckResult& c : r.checks)
        if (c.id == id)
            return &c;
    return nullptr;
}

} // namespace

int main() {
    Report report = run_pipeline();

    // Criteria 1..13 are evaluated by the pipeline's check engine; assert
    // them here and restate a few key values straight from the library so
    // the suite does not rest on the report alone.
    struct Row {
        int number;
        const char* id;
        const char* name;
    };
    const std::vector<Row> rows{
        {1, "cell24-face-vector", "24-cell face vector and coloring"},
        {2, "mirrored-strata", "mirrored complex stratum counts"},
        {3, "r-cusp-orbits-and-shapes", "cusp orbits and cylinder sections of R"},
        {4, "r-2strata-killed", "all 2-strata killed in pairs"},
        {5, "r-boundary-components", "five boundary components"},
        {6, "m-triangulation", "large triangulation invariants"},
        {7, "m-reference-isomorphism", "isomorphism with the reference encoding"},
        {8, "small-triangulation", "small triangulation invariants"},
        {9, "volumes", "volumes of M and X"},
        {10, "x-boundary", "one boundary component after the K-gluing"},
        {11, "euler-characteristics", "Euler characteristics"},
        {12, "m-cusp-count", "M has eight cusps"},
        {13, "property-suites", "module invariants and randomized inputs"},
    };
    for (const Row& row : rows) {
        const CheckResult* c = find_check(report, row.id);
        criterion(row.number, row.name, c && c->pass, c ? c->actual : "check missing");
    }

    // Direct spot checks, independent of the report strings.
    {
        MirroredComplex S = build_mirrored();
        QuotientComplex R = build_R(S);
        bool ok = R.cusp_orbit_sizes() == std::vector<int>{1, 1, 1, 1, 2, 2, 4, 4, 4, 4} &&
                  build_X(R).cells.euler_excluding_vertices() == 2;
        for (const BoundaryComponent& c : boundary_components(R))
            if (!c.is_small())
                ok = ok && valence_multiset(edge_classes(extract_triangulation(c))) ==
                               std::vector<int>{2, 2, 2, 2, 4, 4, 4, 4};
        if (!ok) {
            std::printf("direct spot checks FAILED\n");
            ++failures;
        }
    }

    // Criterion 14: rendered reports are byte-identical across runs.
    {
        const char* cli = std::getenv("GEOBOUND_CLI");
        bool pass;
        std::string detail;
        if (cli && *cli) {
            std::string cmd = std::string("\"") + cli + "\" verify --format json";
            std::string a = run_cli(cmd);
            std::string b = run_cli(cmd);
            pass = !a.empty() && a == b;
            detail = "two `verify --format json` runs of " + std::string(cli) +
                     (pass ? " are byte-identical" : " differ");
        } else {
            pass = render_json(run_pipeline()) == render_json(run_pipeline());
            detail = pass ? "two in-process renderings are byte-identical (CLI path unset)"
                          : "in-process renderings differ";
        }
        criterion(14, "report determinism", pass, detail);
    }

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 14 criteria passed\n");
    return 0;
}
