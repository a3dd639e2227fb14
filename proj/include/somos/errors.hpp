#ifndef SOMOS_ERRORS_HPP
#define SOMOS_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace somos {

// Base class for all structured errors thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string &msg) : std::runtime_error(msg) {}
};

// A tau (or f) term that must be divided by is exactly zero. The index
// identifies the vanishing term; for sigma-function sequences this marks a
// theta-divisor crossing, so callers often want to skip the window rather
// than abort.
class vanishing_tau_error : public error {
public:
    vanishing_tau_error(long long index, const std::string &what_term)
        : error(what_term + " vanishes at index " + std::to_string(index)), m_index(index) {}
    long long index() const { return m_index; }
private:
    long long m_index;
};

// Invalid argument value (zero in a negative-exponent slot, pole of a map, ...).
class domain_error : public error {
public:
    using error::error;
};

// Input fails a structural precondition (point not on curve, Mumford
// invariant broken, schema violation, ...).
class validation_error : public error {
public:
    using error::error;
};

// Requested indices fall outside the available window.
class range_error : public error {
public:
    using error::error;
};

// Exact linear solve hit a singular matrix; carries rank and kernel dimension.
class singular_matrix_error : public error {
public:
    singular_matrix_error(std::size_t rank, std::size_t kernel_dim)
        : error("singular system: rank " + std::to_string(rank) + ", kernel dimension " +
                std::to_string(kernel_dim)),
          m_rank(rank), m_kernel_dim(kernel_dim) {}
    std::size_t rank() const { return m_rank; }
    std::size_t kernel_dim() const { return m_kernel_dim; }
private:
    std::size_t m_rank;
    std::size_t m_kernel_dim;
};

// Numerical kernel cannot reach the requested accuracy (series exhaustion,
// |q| too close to 1, sign constraint unsatisfiable within tolerance, ...).
class precision_error : public error {
public:
    using error::error;
};

// Symbolic checks refuse to run past their configured cap.
class cap_exceeded_error : public error {
public:
    using error::error;
};

}

#endif
