#include "mhs/limits.hpp"

#include <cmath>

#include "mhs/polylog.hpp"

namespace mhs {

CMatrix t_power_minus_n(const Eigen::MatrixXd& logT, double t) {
    const int N = static_cast<int>(logT.rows());
    const CMatrix A = -std::log(t) / two_pi_i * logT.cast<cplx>();
    CMatrix E = CMatrix::Identity(N, N), P = E;
    for (int k = 1; k <= N; ++k) {
        P = P * A / static_cast<double>(k);
        if (P.isZero(0.0)) break;
        E += P;
    }
    return E;
}

namespace {

// unknowns L, a_0..a_{K-1} in L + t Σ a_k log^k t; the corrections of a weight-w
// family carry log powers up to w
CMatrix richardson(const std::vector<double>& ts, const std::vector<CMatrix>& vals) {
    const int S = static_cast<int>(ts.size());
    Eigen::MatrixXd A(S, S);
    for (int m = 0; m < S; ++m) {
        A(m, 0) = 1.0;
        const double l = std::log(ts[m]);
        double p = ts[m];
        for (int k = 1; k < S; ++k, p *= l) A(m, k) = p;
    }
    const Eigen::VectorXd w = A.transpose().fullPivLu().solve(Eigen::VectorXd::Unit(S, 0));
    CMatrix L = CMatrix::Zero(vals[0].rows(), vals[0].cols());
    for (int m = 0; m < S; ++m) L += w(m) * vals[m];
    return L;
}

}  // namespace

LimitBasis limit_of(const std::function<CMatrix(double)>& F, const Eigen::MatrixXd& logT, double t) {
    // weight of the family from its size 2^w
    int w = 0;
    while ((1 << w) < logT.rows()) ++w;
    const int S = w + 2;
    std::vector<double> ts;
    std::vector<CMatrix> vals;
    for (int m = 0; m <= S; ++m) {
        // snapped so that 1 - tm is exact: families near x = 1 use 1 - tm
        const double tm = 1.0 - (1.0 - t * std::pow(2.0, m));
        ts.push_back(tm);
        vals.push_back(F(tm) * t_power_minus_n(logT, tm));
    }
    LimitBasis b;
    b.at_t = vals[0];
    b.value = richardson({ts.begin(), ts.begin() + S}, {vals.begin(), vals.begin() + S});
    const CMatrix coarse = richardson({ts.begin() + 1, ts.end()}, {vals.begin() + 1, vals.end()});
    b.residual = (b.value - coarse).cwiseAbs().maxCoeff();
    const double drift = (b.at_t - b.value).cwiseAbs().maxCoeff();
    b.stabilized = b.residual < 1e-3 * std::max(1.0, drift) && drift < 1.0;
    return b;
}

Point displaced(const Point& base, const LoopLabel& divisor, int tangent, double t) {
    const int n = static_cast<int>(base.size());
    Point x = base;
    if (tangent < 1 || tangent > n) throw UsageError("tangent coordinate out of range");
    if (divisor.axis()) {
        if (tangent != divisor.first) throw UsageError("tangent must be the axis coordinate for " + divisor.str());
        x[tangent - 1] = t;
        return x;
    }
    if (tangent < divisor.first || tangent > divisor.second)
        throw UsageError("tangent coordinate does not meet the divisor " + divisor.str());
    cplx rest = 1.0;
    for (int k = divisor.first; k <= divisor.second; ++k)
        if (k != tangent) rest *= base[k - 1];
    x[tangent - 1] = (1.0 - t) / rest;
    return x;
}

LimitBasis limit_basis(int n, const Point& base, const LoopLabel& divisor, int tangent, double t,
                       const EvalSettings& s) {
    auto F = [&](double u) { return build_matrix(n, displaced(base, divisor, tangent, u), s).M; };
    const Eigen::MatrixXd L = outer_log(F, 4 * t);
    auto b = limit_of(F, L, t);
    b.divisor = divisor.str();
    b.tangent = "x" + std::to_string(tangent);
    b.log_t = L;
    b.generator_log = L.isApprox(log_unipotent(generator(n, divisor)));
    return b;
}

namespace {

cplx L1(cplx z) { return -std::log(1.0 - z); }
cplx L2(cplx x, cplx y, const EvalSettings& s) { return frak_l({x, y}, s); }
cplx Li2(cplx z) { return classical_li(2, z, BranchSide::above); }
const double li2_one = pi * pi / 6.0;

CMatrix tau_scale(CMatrix M, const std::vector<int>& tau) {
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c) M(r, c) *= std::pow(two_pi_i, tau[c]);
    return M;
}

const std::vector<int> tau2{0, 1, 1, 2};
const std::vector<int> tau3{0, 1, 1, 1, 2, 2, 2, 3};

CMatrix lower(int N, std::initializer_list<std::initializer_list<cplx>> rows) {
    CMatrix M = CMatrix::Zero(N, N);
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (cplx v : row) M(r, c++) = v;
        ++r;
    }
    return M;
}

}  // namespace

CMatrix display_m11(cplx x, cplx y, const EvalSettings& s) {
    return tau_scale(lower(4, {{1}, {L1(y), 1}, {L1(x * y), 0, 1}, {L2(x, y, s), L1(x), h_aux(x, y), 1}}), tau2);
}

CMatrix display_m3(cplx x, cplx y, cplx z, const EvalSettings& s) {
    // 𝔏₂((1-xy)/(1-x), (1-xyz)/(1-xy)) continued along the straight-segment system;
    // the closed form jumps across cuts near the divisors
    const cplx e84 = entry(Index::ones(3), Index::unit(3, 1), {x, y, z}, s);
    return tau_scale(lower(8, {{1},
                               {L1(z), 1},
                               {L1(y * z), 0, 1},
                               {L1(x * y * z), 0, 0, 1},
                               {L2(y, z, s), L1(y), h_aux(y, z), 0, 1},
                               {L2(x * y, z, s), L1(x * y), 0, h_aux(x * y, z), 0, 1},
                               {L2(x, y * z, s), 0, L1(x), h_aux(x, y * z), 0, 0, 1},
                               {frak_l({x, y, z}, s), L2(x, y, s), h_aux(y, z) * L1(x), e84, L1(x),
                                h_aux(x, y), h_aux(y, z), 1}}),
                     tau3);
}

namespace {

// log of a unipotent complex matrix
CMatrix log_unipotent_c(const CMatrix& T) {
    const int N = static_cast<int>(T.rows());
    const CMatrix D = T - CMatrix::Identity(N, N);
    CMatrix L = CMatrix::Zero(N, N), P = CMatrix::Identity(N, N);
    for (int k = 1; k <= N; ++k) {
        P = P * D;
        L += ((k % 2) ? 1.0 : -1.0) / k * P;
    }
    return L;
}

}  // namespace

Eigen::MatrixXd outer_log(const std::function<CMatrix(double)>& G, double u) {
    // G(u) ~ L u^N, so G(u)⁻¹ G(u/2) -> 2^{-N}
    const CMatrix A = G(u), B = G(u / 2);
    const CMatrix N = -log_unipotent_c(A.lu().solve(B)) / std::log(2.0) * two_pi_i;
    Eigen::MatrixXd out = (N.real() * 12.0).array().round() / 12.0;
    const double dev = std::max((N.real() - out).cwiseAbs().maxCoeff(), N.imag().cwiseAbs().maxCoeff());
    if (dev > 1e-2) throw DomainError("local monodromy is not rational (deviation " + std::to_string(dev) + ")");
    return out;
}

namespace {

// Limits of the principal-branch display families.  Their local monodromy is
// read off the family: near the divisors the closed forms sit on cuts and the
// monodromy can differ from the generator by half-integer terms.
LimitBasis single(const std::function<CMatrix(double)>& F, double t) { return limit_of(F, outer_log(F, 4 * t), t); }

// inner divisor first at each outer parameter.  The outer parameter starts at
// 10 t and the inner one at 10⁻³ of it: the letters of the triple system near
// (1, 1, z) are separated by the inner parameter and lose relative precision
// below that.
LimitBasis iterated(const std::function<CMatrix(double, double)>& F, double t) {
    const double tout = 10 * t;
    auto G = [&](double u) { return single([&](double v) { return F(v, u); }, u * 1e-3).value; };
    return limit_of(G, outer_log(G, 4 * tout), tout);
}

CMatrix table_2i(cplx y) { return tau_scale(lower(4, {{1}, {L1(y), 1}, {0, 0, 1}, {0, 0, L1(y), 1}}), tau2); }

CMatrix table_2ii(cplx y) {
    return tau_scale(lower(4, {{1}, {L1(y), 1}, {L1(y), 0, 1}, {L1(y) * L1(y) / 2.0, 0, L1(y), 1}}), tau2);
}

CMatrix table_2iii(cplx x) {
    const cplx w = x / (x - 1.0);
    return tau_scale(lower(4, {{1}, {0, 1}, {-L1(w), 0, 1}, {Li2(w), L1(x), -std::log(w), 1}}), tau2);
}

CMatrix table_2iv(cplx y) {
    const cplx w = y / (y - 1.0);
    return tau_scale(lower(4, {{1}, {-L1(w), 1}, {0, 0, 1}, {-Li2(w), std::log(w), 0, 1}}), tau2);
}

CMatrix table_2corner(cplx e41) { return tau_scale(lower(4, {{1}, {0, 1}, {0, 0, 1}, {e41, 0, 0, 1}}), tau2); }

CMatrix table_3i(cplx y, cplx z, const EvalSettings& s) {
    const cplx g = L2(y, z, s) - Li2(1.0 - y) + 3.0 * li2_one;
    return tau_scale(lower(8, {{1},
                               {L1(z), 1},
                               {L1(y * z), 0, 1},
                               {0, 0, 0, 1},
                               {L2(y, z, s), L1(y), h_aux(y, z), 0, 1},
                               {0, 0, 0, L1(z) - std::log(y), 0, 1},
                               {0, 0, 0, L1(y * z), 0, 0, 1},
                               {0, 0, 0, g, 0, L1(y), h_aux(y, z), 1}}),
                     tau3);
}

CMatrix table_3ii(cplx x, cplx z) {
    const cplx g = li2_one - L1(z) * (L1(x) + std::log(x)) - Li2(1.0 - 1.0 / x);
    const cplx m = -L1(x) - std::log(x);
    return tau_scale(lower(8, {{1},
                               {L1(z), 1},
                               {0, 0, 1},
                               {0, 0, 0, 1},
                               {0, 0, L1(z), 0, 1},
                               {0, 0, 0, L1(z) - std::log(x), 0, 1},
                               {0, 0, L1(x), m, 0, 0, 1},
                               {0, 0, L1(z) * L1(x), g, L1(x), m, L1(z), 1}}),
                     tau3);
}

CMatrix table_3iii(cplx y, cplx z, const EvalSettings& s) {
    const cplx g = L2(y, z, s) + Li2(1.0 / (1.0 - y));
    return tau_scale(lower(8, {{1},
                               {L1(z), 1},
                               {L1(y * z), 0, 1},
                               {L1(y * z), 0, 0, 1},
                               {L2(y, z, s), L1(y), h_aux(y, z), 0, 1},
                               {L2(y, z, s), L1(y), 0, h_aux(y, z), 0, 1},
                               {L2(1.0, y * z, s), 0, 0, L1(y * z), 0, 0, 1},
                               {frak_l({1.0, y, z}, s), L2(1.0, y, s), 0, g, 0, L1(y), h_aux(y, z), 1}}),
                     tau3);
}

CMatrix table_3v(cplx x, cplx y, const EvalSettings& s) {
    const cplx wy = y / (y - 1.0), wxy = x * y / (x * y - 1.0);
    const cplx ly = std::log((y - 1.0) / y), lxy = std::log((x * y - 1.0) / (x * y));
    const cplx g = li_iterated({1, 2}, {x * (y - 1.0) / (x * y - 1.0), wy}, s) + std::log(1.0 - x * y) * Li2(wy);
    const cplx h = Li2((1.0 - x * y) / (x * (1.0 - y))) + h_aux(x, y) * lxy;
    return tau_scale(lower(8, {{1},
                               {0, 1},
                               {L1(y), 0, 1},
                               {L1(x * y), 0, 0, 1},
                               {Li2(wy), L1(y), ly, 0, 1},
                               {Li2(wxy), L1(x * y), 0, lxy, 0, 1},
                               {L2(x, y, s), 0, L1(x), h_aux(x, y), 0, 0, 1},
                               {g, L2(x, y, s), ly * L1(x), h, L1(x), h_aux(x, y), ly, 1}}),
                     tau3);
}

CMatrix table_3ix(cplx z) {
    return tau_scale(lower(8, {{1},
                               {L1(z), 1},
                               {0, 0, 1},
                               {0, 0, 0, 1},
                               {0, 0, L1(z), 0, 1},
                               {0, 0, 0, L1(z), 0, 1},
                               {0, 0, 0, 0, 0, 0, 1},
                               {0, 0, 0, 2.0 * li2_one, 0, 0, L1(z), 1}}),
                     tau3);
}

CMatrix table_3x(cplx z, cplx e84, const EvalSettings& s) {
    const cplx l2 = L2(1.0, z, s);
    return tau_scale(lower(8, {{1},
                               {L1(z), 1},
                               {L1(z), 0, 1},
                               {L1(z), 0, 0, 1},
                               {l2, 0, L1(z), 0, 1},
                               {l2, 0, 0, L1(z), 0, 1},
                               {l2, 0, 0, L1(z), 0, 0, 1},
                               {frak_l({1.0, 1.0, z}, s), 0, 0, e84, 0, 0, L1(z), 1}}),
                     tau3);
}

}  // namespace

std::vector<std::string> limit_case_ids() {
    return {"2.i",  "2.ii", "2.iii", "2.iv",     "2.v",  "2.v.iii", "2.vi",    "2.vi.iii",
            "2.vi.iv.y", "3.i", "3.ii",  "3.iii", "3.v", "3.ix", "3.ix.ii", "3.x", "3.x.iv"};
}

LimitCase limit_case(const std::string& id, const std::vector<cplx>& p, double t, const EvalSettings& s) {
    auto need = [&](std::size_t k) {
        if (p.size() != k)
            throw UsageError("limit case " + id + " takes " + std::to_string(k) + " parameter(s)");
    };
    LimitCase out;
    out.id = id;
    bool real = true;
    for (cplx v : p) real = real && v.imag() == 0.0;
    LimitBasis b;
    if (id == "2.i") {  // x = 0
        need(1);
        b = single([&](double u) { return display_m11(u, p[0], s); }, t);
        out.displayed = table_2i(p[0]);
    } else if (id == "2.ii") {  // x = 1
        need(1);
        b = single([&](double u) { return display_m11(1.0 - u, p[0], s); }, t);
        out.displayed = table_2ii(p[0]);
    } else if (id == "2.iii") {  // y = 1
        need(1);
        b = single([&](double u) { return display_m11(p[0], 1.0 - u, s); }, t);
        out.displayed = table_2iii(p[0]);
    } else if (id == "2.iv") {  // xy = 1
        need(1);
        b = single([&](double u) { return display_m11((1.0 - u) / p[0], p[0], s); }, t);
        out.displayed = table_2iv(p[0]);
    } else if (id == "2.v") {  // x = 0, then y = 1
        need(0);
        b = iterated([&](double v, double u) { return display_m11(v, 1.0 - u, s); }, t);
        out.displayed = table_2corner(0.0);
    } else if (id == "2.v.iii") {  // y = 1, then x = 0
        need(0);
        b = iterated([&](double v, double u) { return display_m11(u, 1.0 - v, s); }, t);
        out.displayed = table_2corner(0.0);
    } else if (id == "2.vi") {  // x = 1, then y = 1
        need(0);
        b = iterated([&](double v, double u) { return display_m11(1.0 - v, 1.0 - u, s); }, t);
        out.displayed = table_2corner(0.0);
    } else if (id == "2.vi.iii") {  // y = 1, then x = 1
        need(0);
        b = iterated([&](double v, double u) { return display_m11(1.0 - u, 1.0 - v, s); }, t);
        out.displayed = table_2corner(-li2_one);
    } else if (id == "2.vi.iv.y") {  // xy = 1, then y = 1
        need(0);
        b = iterated([&](double v, double u) { return display_m11((1.0 - v) / (1.0 - u), 1.0 - u, s); }, t);
        out.displayed = table_2corner(li2_one);
    } else if (id == "3.i") {  // x = 0
        need(2);
        b = single([&](double u) { return display_m3(u, p[0], p[1], s); }, t);
        out.displayed = table_3i(p[0], p[1], s);
    } else if (id == "3.ii") {  // y = 0
        need(2);
        b = single([&](double u) { return display_m3(p[0], u, p[1], s); }, t);
        out.displayed = table_3ii(p[0], p[1]);
    } else if (id == "3.iii") {  // x = 1
        need(2);
        b = single([&](double u) { return display_m3(1.0 - u, p[0], p[1], s); }, t);
        out.displayed = table_3iii(p[0], p[1], s);
    } else if (id == "3.v") {  // z = 1
        need(2);
        b = single([&](double u) { return display_m3(p[0], p[1], 1.0 - u, s); }, t);
        out.displayed = table_3v(p[0], p[1], s);
    } else if (id == "3.ix") {  // x = 0, then y = 0
        need(1);
        b = iterated([&](double v, double u) { return display_m3(v, u, p[0], s); }, t);
        out.displayed = table_3ix(p[0]);
    } else if (id == "3.ix.ii") {  // y = 0, then x = 0
        need(1);
        b = iterated([&](double v, double u) { return display_m3(u, v, p[0], s); }, t);
        out.displayed = table_3ix(p[0]);
    } else if (id == "3.x") {  // x = 1, then y = 1
        need(1);
        b = iterated([&](double v, double u) { return display_m3(1.0 - v, 1.0 - u, p[0], s); }, t);
        out.displayed = table_3x(p[0], L2(1.0, p[0], s) + 2.0 * li2_one, s);
    } else if (id == "3.x.iv") {  // y = 1, then x = 1
        need(1);
        b = iterated([&](double v, double u) { return display_m3(1.0 - u, 1.0 - v, p[0], s); }, t);
        out.displayed = table_3x(p[0], L2(1.0, p[0], s), s);
    } else {
        throw UsageError("unknown limit case " + id);
    }
    out.computed = b.value;
    if (real) {
        // real strata: compare the real-analytic parts of the unscaled entries
        const auto& tau = out.displayed.rows() == 4 ? tau2 : tau3;
        for (CMatrix* m : {&out.computed, &out.displayed})
            for (int r = 0; r < m->rows(); ++r)
                for (int c = 0; c < m->cols(); ++c) {
                    const cplx f = std::pow(two_pi_i, tau[c]);
                    (*m)(r, c) = ((*m)(r, c) / f).real() * f;
                }
    }
    out.residual = b.residual;
    out.max_diff = (out.computed - out.displayed).cwiseAbs().maxCoeff();
    out.basis_change = out.displayed.lu().solve(out.computed);
    const auto& tau = out.displayed.rows() == 4 ? tau2 : tau3;
    out.rational_dev = 0.0;
    for (int r = 0; r < out.basis_change.rows(); ++r)
        for (int c = 0; c < out.basis_change.cols(); ++c) {
            const cplx q = out.basis_change(r, c);
            double dev = std::abs(q.imag()) + std::abs(q.real() * 48 - std::round(q.real() * 48)) / 48;
            const double target = r == c ? 1.0 : 0.0;
            if (tau[r] <= tau[c] && r != c) dev = std::abs(q - target);
            if (r == c) dev = std::abs(q - 1.0);
            out.rational_dev = std::max(out.rational_dev, dev);
        }
    return out;
}

}  // namespace mhs
