#pragma once

#include <map>
#include <string>
#include <vector>

#include "plane_graph.hpp"

namespace ifcolor {

// One line of a suite spec: a named instance, how to build it, which checks
// to run on it, and optional expect_* annotations consumed by the checks.
struct InstanceSpec {
    std::string name;
    std::string generator; // hex_patch | random_inclass | random_plane | gadget | file
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> checks;
    std::map<std::string, std::string> expect;
    int line = 0; // spec line, kept for diagnostics
};

struct SuiteCheck {
    std::string kind; // class | color | extend | discharge | reduce
    bool pass = false;
    double seconds = 0.0;
    std::string note; // short result summary or failure reason
};

struct SuiteInstance {
    std::string name;
    std::string describe; // generator plus normalized parameters
    std::vector<SuiteCheck> checks;
};

struct SuiteReport {
    std::vector<SuiteInstance> instances;
    int checks_total() const;
    int checks_failed() const;
    bool ok() const { return checks_failed() == 0; }
    // Line-oriented report; timings are replaced by "-" when disabled so
    // reports can be diffed across runs.
    std::string to_text(bool timings = true) const;
};

// Spec grammar, one instance per line, '#' starts a comment:
//   instance <name> <generator> key=value ... checks=<kind>[,<kind>...]
// Generators and their keys:
//   hex_patch rows= cols= | random_inclass n= [seed=] | random_plane n= [seed=]
//   gadget id= | file path=
// Expectations: expect_class=in|out, expect_dstar=<int>|INF,
// expect_color=some|none, expect_reduce=ok|fail, expect_identity=0|1.
std::vector<InstanceSpec> parse_suite_spec(const std::string& text, const std::string& name);

// Materializes the instance (PARSE_ERROR and generator errors are prefixed
// with "<spec>:<line>:"). Relative file paths resolve against base_dir.
PlaneGraph materialize(const InstanceSpec& spec, const std::string& spec_name,
                       const std::string& base_dir = "");

// Parses, materializes every instance, then runs all checks; instances are
// evaluated concurrently, the report order follows the spec. Throws only for
// spec-level problems; failing checks are reported, not thrown.
SuiteReport run_suite(const std::string& spec_text, const std::string& spec_name = "<spec>",
                      const std::string& base_dir = "");
SuiteReport run_suite_file(const std::string& path);

} // namespace ifcolor
