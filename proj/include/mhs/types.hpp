#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhs {

using cplx = std::complex<double>;
using Point = std::vector<cplx>;

inline constexpr double pi = std::numbers::pi;
inline const cplx two_pi_i{0.0, 2.0 * std::numbers::pi};

// Bad input (shape mismatch, malformed index, ...).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Point on a singular locus, divergent series, branch cut without a side.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Integration path too close to a pole, or a transport that did not close.
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BranchSide { none, above, below };

struct EvalSettings {
    double series_tol = 1e-15;
    double quad_tol = 1e-13;
    long max_terms = 10000000;
    double clearance = 1e-3;  // detour radius scale for poles sitting on a path
    BranchSide side = BranchSide::above;
};

}  // namespace mhs
