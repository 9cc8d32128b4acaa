#ifndef laminar_error_hpp
#define laminar_error_hpp

#include <stdexcept>
#include <string>

namespace laminar {

// Malformed input: bad edge-list lines, self-loops, bad DIMACS text.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (disconnected graph,
// source not of maximum eccentricity, k out of range, ...).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Exponential-time routines refuse instances above their size limits.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A result that should be impossible by construction was observed.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}

#endif /* laminar_error_hpp */
