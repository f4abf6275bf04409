#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctwalk {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Graph or matrix size outside the valid range (e.g. zero-node graph).
class invalid_size_error : public error {
public:
    explicit invalid_size_error(const std::string& what) : error(what) {}
};

// Argument outside the mathematical domain of the operation (e.g. negative
// time for classical diffusion).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// Linearly dependent input detected during orthonormalization.
class dependent_input_error : public error {
public:
    dependent_input_error(const std::string& what, std::size_t index)
        : error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Iterative solver failed to reach its convergence threshold.
class convergence_error : public error {
public:
    convergence_error(const std::string& what, double residual)
        : error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Objects passed together do not describe the same problem (dimension or
// index-set mismatch).
class consistency_error : public error {
public:
    explicit consistency_error(const std::string& what) : error(what) {}
};

// Malformed input file; line() is 1-based.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line)
        : error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace ctwalk
