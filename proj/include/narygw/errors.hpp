#pragma once

#include <stdexcept>
#include <string>

namespace narygw {

// Base for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParamOutOfRange : public Error {
public:
    using Error::Error;
};

// Generic pmf does not sum to 1 within 1e-9. Mismatch is an error, never renormalized.
class PmfNotNormalized : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class TruncationMismatch : public Error {
public:
    using Error::Error;
};

class UnsupportedFamily : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

// Monte Carlo run had censored_frac > 0.001; estimates are unusable.
class BudgetDominated : public Error {
public:
    using Error::Error;
};

} // namespace narygw
