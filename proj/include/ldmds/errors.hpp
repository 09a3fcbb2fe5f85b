#pragma once

#include <stdexcept>
#include <string>

namespace ldmds {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands belong to different prime fields.
class FieldMismatchError : public Error {
public:
    using Error::Error;
};

// Division or inversion of the zero element.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

// Matrix shapes are incompatible with the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A square matrix required to be invertible is singular.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// Code, field, or graph parameters violate a documented precondition.
class InvalidParamsError : public Error {
public:
    using Error::Error;
};

// The requested construction needs a larger field than the one supplied.
class FieldTooSmallError : public Error {
public:
    using Error::Error;
};

// More node erasures than the code's redundancy can repair.
class TooManyErasuresError : public Error {
public:
    using Error::Error;
};

// Erasure count is within bounds but the surviving data is inconsistent,
// so no unique codeword explains it.
class UnrecoverableError : public Error {
public:
    using Error::Error;
};

// An enumeration or search exceeded its configured work budget.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

// The operation's structural precondition does not hold for these inputs.
class NotApplicableError : public Error {
public:
    using Error::Error;
};

// A simulated transmission would use a link absent from the topology.
class TopologyViolationError : public Error {
public:
    using Error::Error;
};

// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace ldmds
