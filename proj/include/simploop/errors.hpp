#ifndef SIMPLOOP_ERRORS_HPP
#define SIMPLOOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simploop {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input or a value that violates a documented precondition.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// A resource cap (vertex count, simplex count, memory budget) was exceeded.
/// Carries the counts seen so far so callers can report them.
class CapError : public Error {
public:
    CapError(const std::string& msg, long long seen, long long cap)
        : Error(msg + " (seen " + std::to_string(seen) + ", cap " + std::to_string(cap) + ")"),
          seen_(seen), cap_(cap) {}
    long long seen() const { return seen_; }
    long long cap() const { return cap_; }

private:
    long long seen_;
    long long cap_;
};

} // namespace simploop

#endif
