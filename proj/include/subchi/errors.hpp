#pragma once

#include <stdexcept>
#include <string>

namespace subchi {

// Base of all library errors. `kind()` is the machine-readable tag used by the
// CLI in its one-line error prefix.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error("invalid-argument", what) {}
};

class Infeasible : public Error {
public:
    explicit Infeasible(const std::string& what) : Error("infeasible", what) {}
};

class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& what) : Error("resource-limit", what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse", what) {}
};

}  // namespace subchi
