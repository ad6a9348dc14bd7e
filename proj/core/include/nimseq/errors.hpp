#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nimseq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance or certificate data that breaks a structural invariant. `index`
// points at the offending element when there is one, else -1.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, std::int64_t index = -1)
        : Error(what), index_(index) {}
    std::int64_t index() const noexcept { return index_; }

private:
    std::int64_t index_;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::int64_t scanned)
        : Error(what), scanned_(scanned) {}
    std::int64_t scanned() const noexcept { return scanned_; }

private:
    std::int64_t scanned_;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class InconsistentWitness : public Error {
public:
    using Error::Error;
};

class InvalidCertificate : public Error {
public:
    using Error::Error;
};

class DependencyError : public Error {
public:
    using Error::Error;
};

class PathError : public Error {
public:
    using Error::Error;
};

class NotClosedError : public Error {
public:
    using Error::Error;
};

}  // namespace nimseq
