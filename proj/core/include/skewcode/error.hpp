// Typed errors shared by all modules; exit_code() is what the CLI reports.
#pragma once

#include <stdexcept>
#include <string>

namespace skewcode {

enum class error_kind {
    validation,     // malformed input: bad modulus, reducible polynomial, shape/ring mismatch, ...
    precondition,   // a theorem hypothesis is not met: not constacyclic, sigma not an automorphism, ...
    bound_exceeded, // an enumeration or verification would exceed the configured bound
    internal_check, // a built-in cross-check failed; indicates a bug, never expected in normal use
};

class error : public std::runtime_error {
public:
    error(error_kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    error_kind kind() const { return kind_; }

    int exit_code() const {
        switch (kind_) {
        case error_kind::validation: return 2;
        case error_kind::precondition: return 3;
        case error_kind::bound_exceeded: return 4;
        case error_kind::internal_check: return 5;
        }
        return 5;
    }

private:
    error_kind kind_;
};

struct validation_error : error {
    explicit validation_error(const std::string& what) : error(error_kind::validation, what) {}
};

struct precondition_error : error {
    explicit precondition_error(const std::string& what) : error(error_kind::precondition, what) {}
};

struct bound_error : error {
    explicit bound_error(const std::string& what) : error(error_kind::bound_exceeded, what) {}
};

struct internal_check_error : error {
    explicit internal_check_error(const std::string& what) : error(error_kind::internal_check, what) {}
};

} // namespace skewcode
