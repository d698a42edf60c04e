#pragma once

#include <stdexcept>
#include <string>

namespace sphcav {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A series failed to reach its tolerance within the allowed number of terms.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double partial_sum, double last_term)
        : Error(what), partial_sum_(partial_sum), last_term_(last_term) {}

    double partial_sum() const noexcept { return partial_sum_; }
    double last_term() const noexcept { return last_term_; }

private:
    double partial_sum_;
    double last_term_;
};

/// Root refinement failed on a bracket.
class RootError : public Error {
public:
    RootError(const std::string& what, double lo, double hi)
        : Error(what), lo_(lo), hi_(hi) {}

    double bracket_lo() const noexcept { return lo_; }
    double bracket_hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

/// A bracketing scan found no sign change in its window.
class SearchError : public Error {
public:
    SearchError(const std::string& what, double window_lo, double window_hi)
        : Error(what), lo_(window_lo), hi_(window_hi) {}

    double window_lo() const noexcept { return lo_; }
    double window_hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

class ClassificationError : public Error {
public:
    using Error::Error;
};

class IntegrationError : public Error {
public:
    using Error::Error;
};

/// Impedance requested at a null of the denominator field component.
class UndefinedImpedanceError : public Error {
public:
    using Error::Error;
};

class LookupError : public Error {
public:
    using Error::Error;
};

} // namespace sphcav
