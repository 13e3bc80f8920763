#pragma once

#include <stdexcept>
#include <string>

namespace calibkit {

// Error taxonomy mirrored by the CLI exit codes: input/usage -> 1,
// data/file -> 2, numerical -> 3.
class Error : public std::runtime_error {
public:
    enum class Kind { input = 1, data = 2, numerical = 3 };

    Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(Kind::input, msg) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(Kind::data, msg) {}
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(Kind::numerical, msg) {}
};

// A design violated the pairwise-distinct / in-domain invariants.
class DegenerateDesignError : public DataError {
public:
    explicit DegenerateDesignError(const std::string& msg) : DataError(msg) {}
};

// Cholesky factorization of a Gram matrix failed within the nugget budget.
class IllConditionedError : public NumericalError {
public:
    IllConditionedError(const std::string& msg, int n, double attempted_nugget)
        : NumericalError(msg), size(n), attempted_nugget(attempted_nugget) {}

    int size;                 // Gram dimension
    double attempted_nugget;  // largest jitter tried before giving up
};

}  // namespace calibkit
