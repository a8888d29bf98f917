#pragma once

#include <stdexcept>
#include <string>

namespace k3scan {

// The scan pipeline only applies to admissible (quasi-smooth) weights.
struct NotTransversal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A fixed-locus Poincare product failed exact polynomial division, i.e. the
// sector's Milnor ring is not captured by the product formula.
struct NonPolynomialSector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The spectral convention self-test (quintic walk-through) failed.
struct ConventionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_number)
        : std::runtime_error(msg + " (line " + std::to_string(line_number) + ")"),
          line(line_number)
    {
    }
    int line;
};

} // namespace k3scan
