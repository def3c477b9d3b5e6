#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lgcert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad group literal, dimension mismatch, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The operation is defined but not supported for this input (e.g. the
/// structural minimal-vector path for |G| < 4).
class Unsupported : public Error {
public:
    using Error::Error;
};

/// A configured resource bound was hit. Carries a verified lower bound when
/// the interrupted computation produced one.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what,
                            std::optional<mpz_class> lower_bound = std::nullopt)
        : Error(what), lower_bound_(std::move(lower_bound)) {}

    const std::optional<mpz_class>& lower_bound() const noexcept { return lower_bound_; }

private:
    std::optional<mpz_class> lower_bound_;
};

} // namespace lgcert
