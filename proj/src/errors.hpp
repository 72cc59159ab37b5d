#pragma once

#include <stdexcept>
#include <string>

namespace qdot {

// Config-file syntax or semantic problem; carries the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Linear-algebra or quadrature breakdown (singular system, lost precision).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A stochastic trajectory reached a state with zero total rate before
// completing its photon budget.
class StalledTrajectoryError : public NumericError {
public:
    using NumericError::NumericError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qdot
