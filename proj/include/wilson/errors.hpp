#pragma once

#include <stdexcept>
#include <string>

namespace wilson {

// Base class for all recoverable errors raised by the library.  They all
// trace back to unusable input, so the CLI maps them to exit code 1;
// internal invariant violations (asserts, memo limit) map to exit code 3.
class WilsonError : public std::runtime_error {
public:
    explicit WilsonError(const std::string& what) : std::runtime_error(what) {}
};

// A move/vertex sequence does not return to its starting point.
class NotClosed : public WilsonError {
public:
    explicit NotClosed(const std::string& what) : WilsonError(what) {}
};

// An operation that needs a non-trivial loop received the null loop.
class EmptyLoop : public WilsonError {
public:
    explicit EmptyLoop(const std::string& what) : WilsonError(what) {}
};

// Malformed input (loop file, move string, assignment JSON, CLI payload).
class ParseError : public WilsonError {
public:
    explicit ParseError(const std::string& what) : WilsonError(what) {}
};

// Consecutive vertices in a vertex-list loop are not lattice neighbours.
class NonAdjacentStep : public ParseError {
public:
    explicit NonAdjacentStep(const std::string& what) : ParseError(what) {}
};

// A region reports an odd excess (distance minus |winding|); cannot happen
// for a genuine loop, guarded defensively during enumeration.
class ParityViolation : public WilsonError {
public:
    explicit ParityViolation(const std::string& what) : WilsonError(what) {}
};

// Series evaluation requested outside its convergence window.
class OutOfRegime : public WilsonError {
public:
    explicit OutOfRegime(const std::string& what) : WilsonError(what) {}
};

// Closed-form spectral density exists only for areas 1, 2, 3.
class UnsupportedClosedForm : public WilsonError {
public:
    explicit UnsupportedClosedForm(const std::string& what) : WilsonError(what) {}
};

// Closed-form evaluation produced a non-negligible imaginary part.
class NonRealClosedForm : public WilsonError {
public:
    explicit NonRealClosedForm(const std::string& what) : WilsonError(what) {}
};

// Catalog lookup with an id outside 1..28.
class UnknownClass : public WilsonError {
public:
    explicit UnknownClass(const std::string& what) : WilsonError(what) {}
};

// The memoization table grew past the configured cap.
class MemoLimitExceeded : public std::runtime_error {
public:
    explicit MemoLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wilson
