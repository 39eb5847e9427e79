#pragma once

#include <stdexcept>
#include <string>

namespace zetaforms {

// A caller violated an operation's precondition (bad parameters, pole
// evaluation, parity, out-of-range index).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation at a pole of a rational function; root() names the offending
// factor's root in "num/den" form.
class PoleError : public PreconditionError {
public:
    PoleError(const std::string& what, std::string root) : PreconditionError(what), root_(std::move(root)) {}
    const std::string& root() const noexcept { return root_; }

private:
    std::string root_;
};

// An internal identity that must hold by construction did not.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A certified claim (integrality, reconstruction, agreement) was checked and
// found false.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative numerical procedure failed to reach its target.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what)
{
    if (!cond) {
        throw PreconditionError(what);
    }
}

} // namespace zetaforms
