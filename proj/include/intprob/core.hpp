#pragma once

#include <stdexcept>
#include <string>

namespace intprob {

/// Absolute tolerance for normalisation and duality identities.
inline constexpr double eps = 1e-9;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input document.
class parse_error : public error {
public:
    using error::error;
};

/// A computation's precondition does not hold for the given input.
class domain_error : public error {
public:
    using error::error;
};

class frame_mismatch : public domain_error {
public:
    frame_mismatch() : domain_error("frame mismatch: operands are defined on different frames") {}
};

class size_error : public domain_error {
public:
    using domain_error::domain_error;
};

class total_conflict : public domain_error {
public:
    explicit total_conflict(double conflict)
        : domain_error("total conflict: conjunctive conflict " + std::to_string(conflict) +
                       " leaves nothing to normalise"),
          conflict_(conflict)
    {
    }
    double conflict() const noexcept { return conflict_; }

private:
    double conflict_;
};

} // namespace intprob
