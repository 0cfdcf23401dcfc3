#pragma once

#include <string>
#include <vector>

#include "g2ps/inertial.hpp"
#include "g2ps/weyl.hpp"

namespace g2ps {

// One verification line: a named comparison with a stable reference id.
struct CheckRow {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
    std::string ref;
};

// A titled table; first row is the header.
struct ReportSection {
    std::string title;
    std::vector<std::vector<std::string>> rows;
};

struct ReportDocument {
    std::string case_name;
    std::vector<ReportSection> sections;
    std::vector<CheckRow> checks;

    bool all_pass() const;
    std::string to_json() const;     // schema_version 1, byte-deterministic
    std::string to_markdown() const; // byte-deterministic
};

struct ReportOptions {
    long long degree = 4;  // truncation degree for the graded-algebra checks
    long long modulus = 12; // order modulus for ramified coordinates
};

// Full per-case document: stabilizer, classes, components, cocharacters,
// fibers, flat family, and (so4) graded-algebra rows.
ReportDocument run_report(const WeylGroup& W, Case c, const ReportOptions& opts = {});

// Check rows only, for one case.
std::vector<CheckRow> verify_case(const WeylGroup& W, Case c, const ReportOptions& opts = {});

// Whole-group checks independent of the case (order, classes, centralizers,
// classification over all ram pairs).
std::vector<CheckRow> verify_group(const WeylGroup& W, const ReportOptions& opts = {});

// Runs the scope ("all" or a case tag), printing one line per check to out.
// Returns 0 if every check passes, 1 on any failure, 2 on an unknown scope.
int run_verify(const WeylGroup& W, const std::string& scope, std::string& out,
               const ReportOptions& opts = {});

} // namespace g2ps
