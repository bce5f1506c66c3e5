#pragma once

#include <string>
#include <vector>

#include "skewkit/diagram.hpp"

namespace skewkit {

struct SuiteCase {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Rows drawn top to bottom with 'x' for a cell and any other character for a gap.
SkewDiagram diagram_from_rows(const std::vector<std::string>& rows);

std::vector<std::string> suite_names();
// The worked examples corpus. Each case catches its own exceptions.
std::vector<SuiteCase> run_example_suite();

}  // namespace skewkit
