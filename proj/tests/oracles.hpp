#pragma once

// Independent reference values shared by the unit tests and the acceptance run.

#include <cmath>
#include <vector>

#include "mhs/chen.hpp"
#include "mhs/dlog.hpp"
#include "mhs/types.hpp"

namespace oracle {

using mhs::cplx;

// Σ_{0<j<k<=N} 1/(j k^2) with the tail Σ_{k>N} H_{k-1}/k^2 from Euler-Maclaurin
inline double euler_double_sum(long N) {
    double s = 0.0, H = 0.0;
    for (long k = 1; k <= N; ++k) {
        s += H / (double(k) * double(k));
        H += 1.0 / double(k);
    }
    const double n = double(N), L = std::log(n), g = 0.57721566490153286;
    // H_{k-1} ≈ log k + γ - 1/(2k); ∫_N^∞ (log u + γ)/u^2 du and the half-step correction
    const double tail = (L + g + 1.0) / n - (L + g) / (2.0 * n * n) - 1.0 / (4.0 * n * n);
    return s + tail;
}

// the six forms of the triple logarithm display, innermost first, in display order
inline std::vector<std::vector<mhs::DlogSum>> li111_display_forms() {
    using mhs::DlogSum;
    using mhs::Factor;
    auto dl = [](int a, int b) { return DlogSum(-1, Factor::one_minus(a, b)); };  // d(u)/(1-u)
    const DlogSum dz = dl(3, 3), dy = dl(2, 2), dx = dl(1, 1), dyz = dl(2, 3), dxy = dl(1, 2), dxyz = dl(1, 3);
    // du/(u(u-1)) = dlog(1-u) - dlog u
    DlogSum ex = DlogSum(1, Factor::one_minus(1, 1)).add(-1, Factor::x(1));
    DlogSum ey = DlogSum(1, Factor::one_minus(2, 2)).add(-1, Factor::x(2));
    DlogSum exy = DlogSum(1, Factor::one_minus(1, 2)).add(-1, Factor::x(1)).add(-1, Factor::x(2));
    return {{dz, dy, dx},
            {dyz, dz + ey, dx},
            {dyz, dx, dz + ey},
            {dz, dxy, dy + ex},
            {dxyz, dz + exy, dy + ex},
            {dxyz, dyz + ex, dz + ey}};
}

// display term k along the straight path from the origin
inline std::vector<cplx> li111_display_terms(const mhs::Point& x) {
    std::vector<cplx> out;
    for (const auto& f : li111_display_forms()) {
        std::vector<mhs::LogForm> p;
        for (const auto& w : f) p.push_back(w.pullback(mhs::Point(3, 0.0), x));
        std::vector<cplx> I(f.size() + 1, 0.0);
        I[0] = 1.0;
        mhs::chen_advance(I, p, 0.0, 1.0, mhs::EvalSettings{}, true, false);
        out.push_back(I.back());
    }
    return out;
}

// display term k equals chain term kChainOf[k] of multilog_terms
inline const int kChainOf[6] = {5, 3, 2, 4, 1, 0};

// Σ_{0<j<k} x^j y^k / (j^a k^b), truncated
inline cplx double_series(int a, int b, cplx x, cplx y, int terms = 600) {
    cplx s = 0.0, inner = 0.0, xp = 1.0, yp = 1.0;
    for (int k = 1; k < terms; ++k) {
        yp *= y;
        s += inner * yp / std::pow(double(k), b);
        xp *= x;
        inner += xp / std::pow(double(k), a);
    }
    return s;
}

}  // namespace oracle
