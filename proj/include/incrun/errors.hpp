#pragma once

#include <stdexcept>
#include <string>

namespace incrun {

// Raised when an internal cross-check fails (e.g. a nonzero sqrt(-3)
// coefficient in the closed-form evaluation). Always a bug, never bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Exact elimination found no nonzero pivot. Cannot happen for the systems
// built by build_system; signals a construction bug.
class SingularMatrixError : public InternalError {
public:
    explicit SingularMatrixError(const std::string& what) : InternalError(what) {}
};

// Evaluation point too close to a pole of sec/tan (or of the continuous
// expectation's denominator) for the requested precision.
class PoleProximityError : public std::runtime_error {
public:
    explicit PoleProximityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace incrun
