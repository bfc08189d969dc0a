#pragma once

#include <stdexcept>
#include <string>

namespace balword {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class IllegalRep : public Error {
public:
    using Error::Error;
};

class AlphabetOverlap : public Error {
public:
    using Error::Error;
};

class UnsupportedK : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class NotSemiStandard : public Error {
public:
    using Error::Error;
};

class BoundTooSmall : public Error {
public:
    using Error::Error;
};

class NotQuadratic : public Error {
public:
    using Error::Error;
};

class DigitOutOfRange : public Error {
public:
    using Error::Error;
};

class StateLimit : public Error {
public:
    using Error::Error;
};

// A checked claim did not hold; the message names the failing sub-check.
class ClaimFailed : public Error {
public:
    using Error::Error;
};

}  // namespace balword
