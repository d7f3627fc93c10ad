#pragma once

#include <stdexcept>
#include <string>

namespace seqmerit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input (CLI exit code 2).
class ParseError : public Error {
public:
    using Error::Error;
};

// Precondition violation: bad length, wrong alphabet, out-of-range parameter.
class DomainError : public Error {
public:
    using Error::Error;
};

// Two routes that must agree disagreed beyond tolerance. Signals a bug in
// this library, not bad user input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// A numerical route failed in a recoverable way (e.g. the quasi-Monte Carlo
// merit denominator came out nonpositive); the message names an alternative.
class RouteError : public Error {
public:
    using Error::Error;
};

} // namespace seqmerit
