#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mhs/monodromy.hpp"
#include "mhs/variation.hpp"

namespace mhs {

struct LimitBasis {
    std::string divisor;
    std::string tangent;
    CMatrix value;       // extrapolated limit, columns s_0, s_1, ...
    CMatrix at_t;        // F(t) t^{-N} at the smallest t
    double residual = 0; // |value(t) - value(2t)|
    bool stabilized = true;
    Eigen::MatrixXd log_t;       // local log T used for the t^{-N} correction
    bool generator_log = true;   // log_t is the log of the divisor's generator
};

// exp(-(log t) logT / 2πi) for nilpotent logT
CMatrix t_power_minus_n(const Eigen::MatrixXd& logT, double t);

// lim F(t) t^{-N}, N = logT/2πi, fitted as L + t Σ_{k<=w} a_k log^k t from samples t 2^m,
// w the weight (2^w = size)
LimitBasis limit_of(const std::function<CMatrix(double)>& F, const Eigen::MatrixXd& logT, double t);

// logT (2πi N) of a one-parameter family G(u) ~ L u^N, read off at u and u/2
// and rounded to twelfths; throws DomainError when N is not rational
Eigen::MatrixXd outer_log(const std::function<CMatrix(double)>& G, double u);

// point with the tangent coordinate solved from f = t, where f is the defining
// function of the divisor (x_j, or 1 - x_i...x_j); tangent is 1-based
Point displaced(const Point& base, const LoopLabel& divisor, int tangent, double t);

// Limit of the path system along the divisor.  The local monodromy is read off
// the family itself: at basepoints outside the standard chamber it is a
// conjugate of the generator.
LimitBasis limit_basis(int n, const Point& base, const LoopLabel& divisor, int tangent, double t,
                       const EvalSettings& s = {});

// the double and triple logarithm matrices in their displayed closed forms,
// principal branches, τ-scaled
CMatrix display_m11(cplx x, cplx y, const EvalSettings& s = {});
CMatrix display_m3(cplx x, cplx y, cplx z, const EvalSettings& s = {});

struct LimitCase {
    std::string id;
    CMatrix computed;
    CMatrix displayed;
    double residual = 0;  // Richardson stability
    double max_diff = 0;  // |computed - displayed|
    // Q with computed = displayed Q; equivalent limit structures when Q is
    // rational, unipotent and only adds higher-weight columns to lower ones
    CMatrix basis_change;
    double rational_dev = 0;
    bool entrywise(double tol = 1e-4) const { return max_diff < tol; }
    bool equivalent(double tol = 1e-5) const { return rational_dev < tol; }
};

// case ids: "2.i" ... "2.vi" (n = 2), "3.i", "3.ii", "3.iii", "3.v", "3.ix", "3.x"
// and the alternative orders "2.v.iii", "2.vi.iii", "2.vi.iv.y", "3.ix.ii", "3.x.iv".
// params are the coordinates that stay free on the stratum.  On real strata
// both sides are reduced to the real parts of their unscaled entries.
LimitCase limit_case(const std::string& id, const std::vector<cplx>& params, double t = 1e-6,
                     const EvalSettings& s = {});
std::vector<std::string> limit_case_ids();

}  // namespace mhs
