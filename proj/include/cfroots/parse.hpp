#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cfroots/homography.hpp"
#include "cfroots/tensor_poly.hpp"

namespace cfroots {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                             std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct SystemSource {
    std::vector<std::string> variables;  // declaration order
    std::vector<TensorPoly> polynomials;
};

/// Parses ';'-separated polynomial expressions over integer literals with
/// + - * ^ and parentheses.  Variables are inferred in first-appearance
/// order unless a leading `vars x,y;` header pins them (then unknown names
/// are errors).  A trailing ';' is allowed.
SystemSource parse_system(const std::string& text);

/// Comma-separated per-axis `lo:hi`; endpoints are integers or fractions
/// p/q, and `inf` is allowed as an upper endpoint.
DomainBox parse_box(const std::string& text);

std::string print_box(const DomainBox& box);

}  // namespace cfroots
