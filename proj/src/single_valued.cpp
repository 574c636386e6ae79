#include "mhs/single_valued.hpp"

#include <cmath>
#include <random>

#include "mhs/polylog.hpp"

namespace mhs {

namespace {

const cplx I1{0.0, 1.0};

cplx Li2(cplx z) { return classical_li(2, z, BranchSide::above); }
cplx Li3(cplx z) { return classical_li(3, z, BranchSide::above); }
double lg(cplx z) { return std::log(std::abs(z)); }

// arg on (-π, π], with the +i0 limit on the cut: arg(1 - z) = -π for real z > 1
double arg1m(cplx z) {
    if (z.imag() == 0.0 && z.real() > 1.0) return -pi;
    return std::arg(1.0 - z);
}

void check_s2(cplx x, cplx y) {
    for (cplx f : {x, y, 1.0 - x, 1.0 - y, 1.0 - x * y})
        if (std::abs(f) < 1e-14) throw DomainError("point lies on xy(1-x)(1-y)(1-xy) = 0");
}

}  // namespace

CMatrix log_unipotent_series(const CMatrix& B) {
    const int N = static_cast<int>(B.rows());
    const CMatrix D = B - CMatrix::Identity(N, N);
    CMatrix L = CMatrix::Zero(N, N), P = CMatrix::Identity(N, N);
    for (int k = 1; k < N; ++k) {
        P = P * D;
        if (P.cwiseAbs().maxCoeff() == 0.0) break;
        L += ((k % 2) ? 1.0 : -1.0) / k * P;
    }
    return L;
}

SVMatrix sv_matrix(const CMatrix& M, const std::vector<int>& tau, const Point& x) {
    const int N = static_cast<int>(M.rows());
    CMatrix T = CMatrix::Zero(N, N);
    int w = 0;
    for (int r = 0; r < N; ++r) {
        T(r, r) = std::pow(I1, tau[r]);
        w = std::max(w, tau[r]);
    }
    SVMatrix out;
    out.x = x;
    out.B = T * M * M.conjugate().inverse() * T;
    out.logB = log_unipotent_series(out.B);
    const CMatrix Id = CMatrix::Identity(N, N);
    CMatrix D = out.B - Id, P = Id;
    for (int k = 0; k <= w; ++k) P = P * D;
    out.invariant_dev = std::max({(out.B.conjugate() * out.B - Id).cwiseAbs().maxCoeff(),
                                  (out.logB.conjugate() + out.logB).cwiseAbs().maxCoeff(), P.cwiseAbs().maxCoeff()});
    return out;
}

SVMatrix sv_matrix(int n, const Point& x, const EvalSettings& s) {
    auto v = build_matrix(n, x, s);
    auto out = sv_matrix(v.M, v.tau, x);
    out.n = n;
    return out;
}

double sv_from_matrix(const CMatrix& M, const std::vector<int>& tau) {
    auto b = sv_matrix(M, tau);
    return (b.logB(b.logB.rows() - 1, 0) / (-2.0 * I1)).real();
}

double sv_from_matrix(int n, const Point& x, const EvalSettings& s) {
    auto v = build_matrix(n, x, s);
    return sv_from_matrix(v.M, v.tau);
}

double sv_dilog(cplx z) {
    if (std::abs(z) == 0.0 || z == 1.0) return 0.0;
    return Li2(z).imag() + arg1m(z) * lg(z);
}

double sv_trilog(cplx z) {
    if (std::abs(z) == 0.0) return 0.0;
    if (z == 1.0) return zeta(3);
    const double l = lg(z);
    return Li3(z).real() - l * Li2(z).real() - l * l * lg(1.0 - z) / 3.0;
}

double sv_doublelog(cplx x, cplx y) {
    check_s2(x, y);
    return frak_l({x, y}).imag() - arg1m(y) * lg(1.0 - x) + arg1m(x * y) * lg((x - 1.0) / (x * (1.0 - y)));
}

double sv_doublelog_dilogs(cplx x, cplx y) {
    check_s2(x, y);
    return sv_dilog((x * y - y) / (1.0 - y)) - sv_dilog(y / (y - 1.0)) - sv_dilog(x * y);
}

double sv_12(cplx x, cplx y) {
    check_s2(x, y);
    const cplx xy = x * y;
    return li_iterated({1, 2}, {x, y}).real() - arg1m(xy) * (sv_dilog(x) + sv_dilog(y)) +
           lg(1.0 - x) * Li2(y).real() - lg(y) * frak_l({x, y}).real() - lg(1.0 - 1.0 / x) * Li2(xy).real() -
           lg(x * y * y) * lg(1.0 - xy) * lg(1.0 - 1.0 / x) / 3.0 +
           lg(y) * (2.0 * lg(1.0 - y) * lg(1.0 - x) + lg(1.0 - xy) * lg(1.0 - y)) / 3.0;
}

double sv_21(cplx x, cplx y) {
    check_s2(x, y);
    const cplx xy = x * y;
    return li_iterated({2, 1}, {x, y}).real() + arg1m(xy) * (sv_dilog(x) + sv_dilog(y)) - arg1m(y) * sv_dilog(x) +
           lg(1.0 - y) * Li2(xy).real() - lg(x) * frak_l({x, y}).real() +
           lg(1.0 - y) * lg(xy) * lg(1.0 - xy) / 3.0 +
           lg(x) * (lg(1.0 - y) * lg(1.0 - x) + lg(1.0 - xy) * lg(x * (1.0 - y) / (1.0 - x))) / 3.0;
}

namespace {

struct Identity {
    std::string id, description;
    int dim;
    bool real_patch;  // multi-valued: (0,1)-real grid
    std::function<double(const Point&)> residual;
};

double six_term(cplx x, cplx y) {
    return sv_trilog(1.0 - x * y) + sv_trilog(1.0 - x) - sv_trilog((1.0 - x) / (1.0 - x * y)) - sv_trilog(y) +
           sv_trilog((y - x * y) / (1.0 - x * y)) - sv_trilog(1.0);
}

double eight_term(cplx x, cplx y, cplx z) {
    const cplx xyz = x * y * z;
    return sv_trilog((y - 1.0) * (1.0 - xyz) / (y * (1.0 - x) * (1.0 - z))) + sv_trilog(y / (y - 1.0)) +
           sv_trilog(x * y) - sv_trilog((1.0 - xyz) / (1.0 - x)) - sv_trilog((1.0 - xyz) / (x * y * (1.0 - z))) -
           sv_trilog((y - y * z) / (y - 1.0)) - sv_trilog((y - x * y) / (y - 1.0)) + sv_trilog(1.0 - x);
}

const std::vector<Identity>& identities() {
    static const std::vector<Identity> all{
        {"llsing2", "L11 from Im Li11 equals the three-dilog form", 2, false,
         [](const Point& p) { return std::abs(sv_doublelog(p[0], p[1]) - sv_doublelog_dilogs(p[0], p[1])); }},
        {"fe11", "L11(x,y) = -L11(1-x, y/(y-1))", 2, false,
         [](const Point& p) {
             return std::abs(sv_doublelog(p[0], p[1]) + sv_doublelog(1.0 - p[0], p[1] / (p[1] - 1.0)));
         }},
        {"six_term", "L21(y,x) as six trilogarithms", 2, false,
         [](const Point& p) { return std::abs(sv_21(p[1], p[0]) - six_term(p[0], p[1])); }},
        {"sum", "L12(x,y) + L21(y,x) + L3(xy) = 0", 2, false,
         [](const Point& p) { return std::abs(sv_12(p[0], p[1]) + sv_21(p[1], p[0]) + sv_trilog(p[0] * p[1])); }},
        {"eight_term", "L111 from log B against eight trilogarithms", 3, false,
         [](const Point& p) { return std::abs(sv_from_matrix(3, p) - eight_term(p[0], p[1], p[2])); }},
        {"zagier", "Li21(y,x) as trilogarithms plus products", 2, true,
         [](const Point& p) {
             const cplx x = p[0], y = p[1], xy = x * y;
             const cplx rhs = Li3(1.0 - xy) + Li3(1.0 - x) - Li3((1.0 - x) / (1.0 - xy)) - Li3(y) +
                              Li3((y - xy) / (1.0 - xy)) - zeta(3) -
                              std::log(1.0 - xy) * (pi * pi / 6 + Li2(1.0 - x)) -
                              std::log((1.0 - x) / (1.0 - xy)) * Li2(y) +
                              0.5 * std::log(y) * std::pow(std::log(1.0 - xy), 2);
             return std::abs(li_iterated({2, 1}, {y, x}) - rhs);
         }},
        {"li11", "Li11(x,y) as three dilogarithms", 2, true,
         [](const Point& p) {
             const cplx x = p[0], y = p[1];
             return std::abs(frak_l({x, y}) - (Li2((x * y - y) / (1.0 - y)) - Li2(y / (y - 1.0)) - Li2(x * y)));
         }},
        {"li21", "Li2(1-t) + Li2(1-1/t) + log^2(t)/2 = 0", 1, true,
         [](const Point& p) {
             const cplx t = p[0];
             return std::abs(Li2(1.0 - t) + Li2(1.0 - 1.0 / t) + 0.5 * std::pow(std::log(t), 2));
         }},
        {"li12_li21", "Li12(x,y) + Li21(y,x) + Li3(xy) = -log(1-x) Li2(y)", 2, true,
         [](const Point& p) {
             const cplx x = p[0], y = p[1];
             return std::abs(li_iterated({1, 2}, {x, y}) + li_iterated({2, 1}, {y, x}) + Li3(x * y) +
                             std::log(1.0 - x) * Li2(y));
         }},
    };
    return all;
}

}  // namespace

std::vector<std::string> identity_ids() {
    std::vector<std::string> out;
    for (const auto& i : identities()) out.push_back(i.id);
    return out;
}

IdentityReport run_identity(const std::string& id, const GridSpec& g) {
    for (const auto& idn : identities()) {
        if (idn.id != id) continue;
        IdentityReport rep;
        rep.id = id;
        rep.description = idn.description;
        std::mt19937 gen(g.seed);
        std::uniform_real_distribution<double> unit(0.05, 0.95), rad(0.1, 0.9), ang(-pi, pi);
        while (static_cast<int>(rep.points.size()) < g.points) {
            Point p(idn.dim);
            for (auto& v : p) v = idn.real_patch ? cplx(unit(gen)) : std::polar(rad(gen), ang(gen));
            double r;
            try {
                r = idn.residual(p);
            } catch (const DomainError&) {
                continue;
            }
            rep.points.push_back(p);
            rep.residuals.push_back(r);
            rep.max_residual = std::max(rep.max_residual, r);
        }
        return rep;
    }
    throw UsageError("unknown identity " + id);
}

std::vector<IdentityReport> identity_suite(const GridSpec& g) {
    std::vector<IdentityReport> out;
    for (const auto& id : identity_ids()) out.push_back(run_identity(id, g));
    return out;
}

}  // namespace mhs
