#pragma once

#include <stdexcept>
#include <string>

namespace hq {

// Base of every error raised by the library. Callers that only care about
// "something went wrong" catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDivision : public Error {
public:
    ZeroDivision() : Error("division by zero quaternion") {}
    explicit ZeroDivision(const std::string& what) : Error(what) {}
};

class RealInput : public Error {
public:
    using Error::Error;
};

class NotEquivalent : public Error {
public:
    using Error::Error;
};

class EquivalentNodes : public Error {
public:
    using Error::Error;
};

class NodesNotDistinct : public Error {
public:
    using Error::Error;
};

// Three or more nodes of one conjugacy class where at most two are allowed.
class AssumptionAViolated : public Error {
public:
    using Error::Error;
};

class InvalidConstraint : public Error {
public:
    using Error::Error;
};

class Singular : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// A quantity that the theory proves nonzero (or an identity it proves true)
// failed. Always a bug, never bad user input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace hq
