#include "mhs/weight3.hpp"

#include <cmath>

#include "mhs/polylog.hpp"

namespace mhs {

namespace {

cplx L1(cplx z) { return -std::log(1.0 - z); }
cplx Li2(cplx z) { return classical_li(2, z, BranchSide::above); }

void check_s2(cplx x, cplx y) {
    for (cplx f : {x, y, 1.0 - x, 1.0 - y, 1.0 - x * y})
        if (std::abs(f) < 1e-14) throw DomainError("point lies on xy(1-x)(1-y)(1-xy) = 0");
}

SmallVariation from_system(SmallKind k, const WordSystem& w, cplx x, cplx y, const EvalSettings& s) {
    check_s2(x, y);
    SmallVariation v;
    v.kind = k;
    v.M = word_matrix(w, s);
    for (const auto& r : w.rows) v.tau.push_back(static_cast<int>(r.size()));
    v.x = {x, y};
    return v;
}

CMatrix scaled(CMatrix M, const std::vector<int>& tau) {
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c) M(r, c) *= std::pow(two_pi_i, tau[c]);
    return M;
}

const std::vector<int> tau21{0, 1, 1, 2, 2, 3};
const std::vector<int> tau12{0, 1, 1, 2, 2, 2, 3};

DlogSum d(int c, Factor f) { return DlogSum(c, f); }

IMatrix from_entries(int N, std::initializer_list<std::tuple<int, int, int>> es) {
    IMatrix M = IMatrix::Identity(N, N);
    for (auto [r, c, v] : es) M(r - 1, c - 1) += v;
    return M;
}

}  // namespace

SmallKind parse_small_kind(const std::string& s) {
    if (s == "2,1") return SmallKind::li21;
    if (s == "1,2") return SmallKind::li12;
    if (s == "classical") return SmallKind::classical;
    throw UsageError("unknown kind '" + s + "' (expected 2,1, 1,2 or classical)");
}

std::string kind_name(SmallKind k) {
    switch (k) {
        case SmallKind::li21: return "2,1";
        case SmallKind::li12: return "1,2";
        default: return "classical";
    }
}

SmallVariation classical_matrix(int n, cplx x, const EvalSettings& s) {
    if (n < 1) throw UsageError("classical_matrix needs n >= 1");
    if (std::abs(x) < 1e-14 || std::abs(1.0 - x) < 1e-14) throw DomainError("x must avoid 0 and 1");
    cplx lg = std::log(x);
    if (x.imag() == 0.0 && x.real() < 0.0) lg = cplx(std::log(-x.real()), s.side == BranchSide::below ? -pi : pi);
    SmallVariation v;
    v.kind = SmallKind::classical;
    v.n = n;
    v.x = {x};
    v.M = CMatrix::Zero(n + 1, n + 1);
    for (int r = 0; r <= n; ++r) {
        v.tau.push_back(r);
        v.M(r, 0) = r == 0 ? cplx(1.0) : classical_li(r, x, s.side);
        cplx p = 1.0;
        for (int c = r; c >= 1; --c) {
            v.M(r, c) = p;
            p *= lg / double(r - c + 1);
        }
    }
    v.M = scaled(v.M, v.tau);
    return v;
}

WordSystem system_21(cplx x, cplx y) {
    return {{1.0 / (x * y), 0.0, 1.0 / y}, {{}, {3}, {1}, {1, 3}, {1, 2}, {1, 2, 3}}};
}

WordSystem system_12(cplx x, cplx y) {
    return {{1.0 / (x * y), 1.0 / y, 0.0}, {{}, {2}, {1}, {1, 2}, {2, 3}, {1, 3}, {1, 2, 3}}};
}

SmallVariation build_21(cplx x, cplx y, const EvalSettings& s) {
    check_s2(x, y);
    return from_system(SmallKind::li21, system_21(x, y), x, y, s);
}

SmallVariation build_12(cplx x, cplx y, const EvalSettings& s) {
    check_s2(x, y);
    return from_system(SmallKind::li12, system_12(x, y), x, y, s);
}

cplx f_21(cplx x, cplx y) { return Li2(1.0 / x) - Li2(y) + std::log(x * y) * L1(y); }
cplx g_12(cplx x, cplx y) { return Li2(y) - Li2(1.0 / x) - std::log(x * y) * L1(1.0 / x); }

CMatrix display_21(cplx x, cplx y) {
    check_s2(x, y);
    CMatrix M = CMatrix::Zero(6, 6);
    const cplx w = (1.0 - x * y) / (1.0 - x);
    M.diagonal().setOnes();
    M(1, 0) = L1(y);
    M(2, 0) = L1(x * y);
    M(3, 0) = frak_l({x, y});
    M(3, 1) = L1(x);
    M(3, 2) = L1(w);
    M(4, 0) = Li2(x * y);
    M(4, 2) = std::log(x * y);
    M(5, 0) = li_iterated({2, 1}, {x, y});
    M(5, 1) = Li2(x);
    M(5, 2) = f_21(x, y);
    M(5, 3) = std::log(x);
    M(5, 4) = L1(y);
    return scaled(M, tau21);
}

CMatrix display_12(cplx x, cplx y) {
    check_s2(x, y);
    CMatrix M = CMatrix::Zero(7, 7);
    const cplx w = (1.0 - x * y) / (1.0 - x);
    M.diagonal().setOnes();
    M(1, 0) = L1(y);
    M(2, 0) = L1(x * y);
    M(3, 0) = frak_l({x, y});
    M(3, 1) = L1(x);
    M(3, 2) = L1(w);
    M(4, 0) = Li2(y);
    M(4, 1) = std::log(y);
    M(5, 0) = Li2(x * y);
    M(5, 2) = std::log(x * y);
    M(6, 0) = li_iterated({1, 2}, {x, y});
    M(6, 1) = L1(x) * std::log(y);
    M(6, 2) = g_12(x, y);
    M(6, 3) = std::log(y);
    M(6, 4) = L1(x);
    M(6, 5) = -L1(1.0 / x);
    return scaled(M, tau12);
}

Connection small_connection(SmallKind k, int n) {
    Connection om;
    const Factor X = Factor::x(1), Y = Factor::x(2), U = Factor::one_minus(1, 1), V = Factor::one_minus(2, 2),
                 W = Factor::one_minus(1, 2);
    auto sized = [&](int N) { om.c.assign(N, std::vector<DlogSum>(N)); };
    // dLi_1((1-xy)/(1-x))
    DlogSum dw;
    dw.add(-1, X).add(-1, V).add(1, U);
    switch (k) {
        case SmallKind::classical:
            om.n = 1;
            sized(n + 1);
            if (n >= 1) om.c[1][0] = d(-1, U);
            for (int r = 2; r <= n; ++r) om.c[r][r - 1] = d(1, X);
            break;
        case SmallKind::li21:
            om.n = 2;
            sized(6);
            om.c[1][0] = d(-1, V);
            om.c[2][0] = d(-1, W);
            om.c[3][1] = d(-1, U);
            om.c[3][2] = dw;
            om.c[4][2] = d(1, X) + d(1, Y);
            om.c[5][3] = d(1, X);
            om.c[5][4] = d(-1, V);
            break;
        case SmallKind::li12:
            om.n = 2;
            sized(7);
            om.c[1][0] = d(-1, V);
            om.c[2][0] = d(-1, W);
            om.c[3][1] = d(-1, U);
            om.c[3][2] = dw;
            om.c[4][1] = d(1, Y);
            om.c[5][2] = d(1, X) + d(1, Y);
            om.c[6][3] = d(1, Y);
            om.c[6][4] = d(-1, U);
            om.c[6][5] = d(1, U) + d(-1, X);
            break;
    }
    return om;
}

double verify_weight3_flatness(SmallKind k, const Point& x, double h, const EvalSettings& s) {
    if (k == SmallKind::classical) {
        if (x.size() != 1) throw UsageError("classical flatness takes one coordinate");
        const int n = 3;
        return flatness_residual([&](const Point& p) { return classical_matrix(n, p[0], s).M; },
                                 small_connection(k, n), x, h);
    }
    if (x.size() != 2) throw UsageError("weight-3 flatness takes a point (x, y)");
    auto build = [&](const Point& p) {
        return k == SmallKind::li21 ? build_21(p[0], p[1], s).M : build_12(p[0], p[1], s).M;
    };
    return flatness_residual(build, small_connection(k), x, h);
}

std::vector<LabeledGenerator> weight3_generators(SmallKind k, bool raw) {
    std::vector<LabeledGenerator> out;
    if (k == SmallKind::li21) {
        out = {{{1, 0}, from_entries(6, {{4, 3, -1}, {5, 3, 1}, {6, 4, 1}})},
               {{2, 0}, from_entries(6, {{6, 3, 1}})},
               {{1, 1}, from_entries(6, {{4, 2, 1}, {4, 3, -1}})},
               {{2, 2}, from_entries(6, {{2, 1, 1}, {4, 3, 1}, {6, 5, 1}})},
               {{1, 2}, from_entries(6, {{3, 1, 1}})}};
    } else if (k == SmallKind::li12) {
        out = {{{1, 0}, from_entries(7, {{4, 3, -1}, {6, 3, 1}, {7, 6, -1}})},
               {{2, 0}, from_entries(7, {{5, 2, 1}, {6, 3, 1}, {7, 4, 1}})},
               {{1, 1}, from_entries(7, {{4, 2, 1}, {4, 3, -1}, {7, 5, 1}, {7, 6, -1}})},
               {{2, 2}, from_entries(7, {{2, 1, 1}, {4, 3, 1}})},
               {{1, 2}, from_entries(7, {{3, 1, 1}})}};
    } else {
        throw UsageError("generator lists exist for the kinds 2,1 and 1,2");
    }
    if (!raw)
        for (auto& g : out)
            if (!g.loop.axis()) g.M = IMatrix(g.M.cast<double>().inverse().array().round().cast<int>());
    return out;
}

TransportResult weight3_transport(SmallKind k, const Point& x0, const LoopLabel& q, const EvalSettings& s) {
    if (k == SmallKind::classical || x0.size() != 2) throw UsageError("weight-3 transport takes kind 2,1 or 1,2 and (x, y)");
    const CMatrix P = k == SmallKind::li21 ? build_21(x0[0], x0[1], s).M : build_12(x0[0], x0[1], s).M;
    auto r = monodromy_from_transport(small_connection(k), P, standard_loop(x0, q));
    if (r.deviation > 1e-4)
        throw DomainError("transport did not resolve an integer matrix (deviation " + std::to_string(r.deviation) + ")");
    return r;
}

}  // namespace mhs
