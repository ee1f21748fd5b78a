#pragma once

#include <stdexcept>
#include <string>

namespace dendrimag {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// exp of a series whose constant term is not zero.
class NonNilpotentInput : public Error {
public:
    using Error::Error;
};

/// log of a series whose constant term is not the unit.
class BadConstantTerm : public Error {
public:
    using Error::Error;
};

/// A half-product where both operands carry a multiple of the adjoined unit.
class UndefinedUnitProduct : public Error {
public:
    using Error::Error;
};

/// chi_theta requested at weight zero.
class ZeroWeight : public Error {
public:
    using Error::Error;
};

class NonFinite : public Error {
public:
    using Error::Error;
};

class DegenerateFit : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

} // namespace dendrimag
