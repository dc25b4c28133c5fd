#pragma once

#include <stdexcept>
#include <string>

namespace minact {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// gcd(a, m) != 1 where a unit was required
struct NotAUnit : Error {
    using Error::Error;
};

// requested multiplicative order does not divide the unit group order
struct OrderDoesNotDivide : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

// group enumeration exceeded the configured budget
struct TooLarge : Error {
    using Error::Error;
};

struct NotASubgroup : Error {
    using Error::Error;
};

// modular character computation could not be lifted to exact values;
// retried internally with a larger prime before escaping
struct LiftingFailure : Error {
    using Error::Error;
};

// bar-resolution budget exceeded
struct ResourceLimit : Error {
    using Error::Error;
};

struct MalformedFactsEntry : Error {
    using Error::Error;
};

} // namespace minact
