#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace elsim {

/// Raised when an iterative linear solve fails to meet its tolerance.
/// Carries the residual history so callers can diagnose the failure.
class solver_error : public std::runtime_error {
public:
    solver_error(const std::string& msg, std::vector<double> history = {})
        : std::runtime_error(msg), residual_history(std::move(history)) {}

    std::vector<double> residual_history;
};

/// Raised when a run configuration cannot be parsed or fails validation.
/// line is 1-based for parse errors and 0 for validation errors.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg, int line_no = 0)
        : std::runtime_error(msg), line(line_no) {}

    int line;
};

}  // namespace elsim
