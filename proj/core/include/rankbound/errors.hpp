#pragma once

#include <stdexcept>
#include <string>

namespace rankbound {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Adaptive integration ran out of subdivision budget before reaching the
// requested tolerance. Carries the best estimate reached so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double best_value, double best_error)
        : std::runtime_error(what), best_value_(best_value), best_error_(best_error) {}

    double best_value() const noexcept { return best_value_; }
    double best_error() const noexcept { return best_error_; }

private:
    double best_value_;
    double best_error_;
};

// The integrand returned NaN or an infinity.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double abscissa)
        : std::runtime_error(what), abscissa_(abscissa) {}

    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

// Lookup beyond the range covered by an arithmetic sieve.
class TableError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace rankbound
