#pragma once

#include <stdexcept>
#include <string>

namespace tropicount {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text. line/col are 1-based; 0 means "not tied to a position".
struct parse_error : error {
    int line = 0;
    int col = 0;
    parse_error(const std::string& msg, int line_ = 0, int col_ = 0)
        : error(line_ > 0 ? "parse error at " + std::to_string(line_) + ":" +
                                std::to_string(col_) + ": " + msg
                          : "parse error: " + msg),
          line(line_), col(col_) {}
};

// An exhaustive search or enumeration would exceed its configured budget.
struct budget_error : error {
    using error::error;
};

// Division by zero, non-unimodular inverse, zero decomposition, and similar
// domain violations.
struct math_error : error {
    using error::error;
};

// A computation needs a definite value but every known digit has cancelled.
struct precision_error : error {
    using error::error;
};

// A caller-facing precondition does not hold (e.g. lifting at a point that is
// not semiregular).
struct precondition_error : error {
    using error::error;
};

// The random-coefficient model is incompatible with the support
// (characteristic divides an exponent gap).
struct model_error : error {
    using error::error;
};

}  // namespace tropicount
