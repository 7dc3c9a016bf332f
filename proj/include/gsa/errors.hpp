#pragma once

#include <stdexcept>
#include <string>

namespace gsa {

/// Raised when input data cannot support the requested estimate
/// (constant samples, zero output variance, and similar).
class degenerate_data_error : public std::runtime_error {
public:
    explicit degenerate_data_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by configuration parsing; carries the offending line number
/// when known (0 when the error is not tied to a specific line).
class config_error : public std::runtime_error {
public:
    config_error(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace gsa
