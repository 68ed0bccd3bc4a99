#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParamOutOfRange : public Error {
public:
    using Error::Error;
};

class RadiusOutOfRange : public Error {
public:
    using Error::Error;
};

// compose() and quasi_compose() need w(0) = 0.
class NonVanishingInnerConstant : public Error {
public:
    using Error::Error;
};

// A crossover scan was asked for on a bracket whose endpoint verdicts agree.
class BadBracket : public Error {
public:
    using Error::Error;
};

// Raised when a radius exceeds the range on which an inequality is claimed.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

// h is constant to working precision, so the order of its zero is undefined.
class DegenerateOrder : public Error {
public:
    using Error::Error;
};

class SeriesFormatError : public Error {
public:
    using Error::Error;
};

} // namespace bohr
