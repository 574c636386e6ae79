#include "mhs/monodromy.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <sstream>

namespace mhs {

std::string LoopLabel::str() const { return std::to_string(first) + "," + std::to_string(second); }

LoopLabel LoopLabel::parse(const std::string& s) {
    LoopLabel q;
    char comma = 0;
    std::istringstream in(s);
    if (!(in >> q.first >> comma >> q.second) || comma != ',' || !in.eof())
        throw UsageError("loop label must look like i,j (j = 0 for an axis)");
    return q;
}

std::vector<LoopLabel> all_loops(int n) {
    std::vector<LoopLabel> out;
    for (int j = 1; j <= n; ++j) out.push_back({j, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.push_back({i, j});
    return out;
}

namespace {

void check_label(int n, const LoopLabel& q) {
    if (q.first < 1 || q.first > n || q.second < 0 || q.second > n || (!q.axis() && q.second < q.first))
        throw UsageError("loop label " + q.str() + " out of range for n = " + std::to_string(n));
}

// t_0 = 0, the 1-slots of j, t_{l+1} = n+1
std::vector<int> t_list(const Index& j) {
    std::vector<int> t{0};
    for (int v : j.slots()) t.push_back(v);
    t.push_back(j.n() + 1);
    return t;
}

}  // namespace

IMatrix generator(int n, const LoopLabel& q) {
    check_label(n, q);
    auto all = all_indices(n);
    const int N = static_cast<int>(all.size());
    IMatrix M = IMatrix::Identity(N, N);
    auto add = [&](const Index& j, int slot, int c, int col) {
        Index i(n, j.mask() | (1u << (slot - 1)));
        M(layout_position(i), col) += c;
    };
    for (int col = 0; col < N; ++col) {
        const Index& J = all[col];
        auto t = t_list(J);
        const int l = static_cast<int>(t.size()) - 2;
        for (int r = 0; r <= l; ++r) {
            if (q.axis()) {
                const int j = q.first;
                if (r >= 1 && t[r] <= j && j <= t[r + 1] - 2)
                    for (int s = j; s <= t[r + 1] - 2; ++s) add(J, s + 1, -1, col);
                continue;
            }
            const int i = q.first, j = q.second;
            if (r >= 1 && t[r] == i && j <= t[r + 1] - 2) add(J, j + 1, 1, col);
            if (t[r] + 1 <= i && i <= j && j == t[r + 1] - 1) add(J, i, -1, col);
        }
    }
    return M;
}

bool is_unipotent(const IMatrix& M, int order) {
    const int N = static_cast<int>(M.rows());
    IMatrix D = M - IMatrix::Identity(N, N);
    IMatrix P = IMatrix::Identity(N, N);
    for (int k = 0; k < order; ++k) P = P * D;
    return P.isZero();
}

bool standard_chamber(const Point& x) {
    const auto a = a_coords(x);
    const int n = static_cast<int>(x.size());
    auto right = [&](int p, int k, int m) { return std::imag((a[m] - a[p]) / (a[k] - a[p])) < 0.0; };
    for (int k = 2; k <= n + 1; ++k)
        if (!right(0, 1, k)) return false;
    for (int p = 1; p <= n + 1; ++p)
        for (int k = p + 1; k <= n + 1; ++k)
            for (int m = k + 1; m <= n + 1; ++m)
                if (!right(p, k, m)) return false;
    return true;
}

LoopPath reversed(const LoopPath& p) {
    LoopPath r;
    r.x = [f = p.x](double s) { return f(1.0 - s); };
    r.dx = [f = p.dx](double s) {
        Point d = f(1.0 - s);
        for (auto& v : d) v = -v;
        return d;
    };
    for (auto it = p.breaks.rbegin(); it != p.breaks.rend(); ++it) r.breaks.push_back(1.0 - *it);
    return r;
}

LoopPath concatenate(const LoopPath& p, const LoopPath& q) {
    LoopPath r;
    r.x = [p, q](double s) { return s < 0.5 ? p.x(2 * s) : q.x(2 * s - 1); };
    r.dx = [p, q](double s) {
        Point d = s < 0.5 ? p.dx(2 * s) : q.dx(2 * s - 1);
        for (auto& v : d) v *= 2.0;
        return d;
    };
    for (double b : p.breaks) r.breaks.push_back(b / 2);
    for (std::size_t k = 1; k < q.breaks.size(); ++k) r.breaks.push_back(0.5 + q.breaks[k] / 2);
    return r;
}

LoopPath standard_loop(const Point& x0, const LoopLabel& q, double radius) {
    const int n = static_cast<int>(x0.size());
    check_label(n, q);
    LoopPath L;
    if (q.axis()) {
        const int j = q.first - 1;
        L.x = [x0, j](double s) {
            Point x = x0;
            x[j] *= std::exp(two_pi_i * s);
            return x;
        };
        L.dx = [x0, j](double s) {
            Point d(x0.size(), 0.0);
            d[j] = two_pi_i * x0[j] * std::exp(two_pi_i * s);
            return d;
        };
        L.breaks = {0.0, 0.25, 0.5, 0.75, 1.0};
        return L;
    }
    // a_p travels to a small circle around a_c and back
    const auto a0 = a_coords(x0);
    const int p = q.first, c = q.second + 1;
    const cplx center = a0[c];
    double gap = std::abs(center);
    for (int k = 1; k <= n + 1; ++k)
        if (k != p && k != c) gap = std::min(gap, std::abs(a0[k] - center));
    const double rho = radius * gap;
    const cplx start = a0[p];
    const cplx u = (start - center) / std::abs(start - center);
    const cplx near = center + rho * u;
    // s in [0,1/4]: out, [1/4,3/4]: circle, [3/4,1]: back
    auto ap = [=](double s) -> std::pair<cplx, cplx> {
        if (s < 0.25) return {start + (near - start) * (4 * s), (near - start) * 4.0};
        if (s > 0.75) return {near + (start - near) * (4 * s - 3), (start - near) * 4.0};
        const cplx e = std::exp(two_pi_i * (2 * s - 0.5));
        return {center + rho * u * e, rho * u * e * 2.0 * two_pi_i};
    };
    L.x = [=](double s) {
        auto a = a0;
        a[p] = ap(s).first;
        Point x(n);
        for (int k = 1; k <= n; ++k) x[k - 1] = a[k + 1] / a[k];
        return x;
    };
    L.dx = [=](double s) {
        auto [v, dv] = ap(s);
        Point d(n, 0.0);
        if (p >= 2) d[p - 2] = dv / a0[p - 1];
        d[p - 1] = -a0[p + 1] * dv / (v * v);
        return d;
    };
    L.breaks = {0.0, 0.25, 0.375, 0.5, 0.625, 0.75, 1.0};
    return L;
}

LoopPath polyline_loop(const std::vector<Point>& v) {
    if (v.size() < 3) throw UsageError("a loop needs at least three vertices");
    const auto& f = v.front();
    const auto& b = v.back();
    for (std::size_t d = 0; d < f.size(); ++d)
        if (std::abs(f[d] - b[d]) > 1e-14) throw UsageError("polyline loop must end at its first vertex");
    const double m = static_cast<double>(v.size() - 1);
    LoopPath L;
    L.x = [v, m](double s) {
        const std::size_t k = std::min(static_cast<std::size_t>(s * m), v.size() - 2);
        const double u = s * m - k;
        Point x(v[k].size());
        for (std::size_t d = 0; d < x.size(); ++d) x[d] = v[k][d] + u * (v[k + 1][d] - v[k][d]);
        return x;
    };
    L.dx = [v, m](double s) {
        const std::size_t k = std::min(static_cast<std::size_t>(s * m), v.size() - 2);
        Point d(v[k].size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = m * (v[k + 1][i] - v[k][i]);
        return d;
    };
    for (std::size_t k = 0; k < v.size(); ++k) L.breaks.push_back(k / m);
    return L;
}

LoopPath infinity_loop(const Point& x0, int coord, double R, int segments) {
    if (coord < 1 || coord > static_cast<int>(x0.size())) throw UsageError("infinity_loop: coordinate out of range");
    const int j = coord - 1;
    const double th = std::arg(x0[j]);
    if (R <= std::abs(x0[j])) throw UsageError("infinity_loop: radius inside the basepoint");
    std::vector<Point> v{x0};
    for (int k = 0; k <= segments; ++k) {
        Point p = x0;
        p[j] = k == segments ? std::polar(R, th) : std::polar(R, th - 2 * pi * k / segments);
        v.push_back(p);
    }
    v.push_back(x0);
    return polyline_loop(v);
}

LoopPath circle_loop(const Point& center, int coord, double r) {
    if (coord < 1 || coord > static_cast<int>(center.size())) throw UsageError("circle_loop: coordinate out of range");
    const int j = coord - 1;
    LoopPath L;
    L.x = [center, j, r](double s) {
        Point x = center;
        x[j] += r * std::exp(two_pi_i * s);
        return x;
    };
    L.dx = [center, j, r](double s) {
        Point d(center.size(), 0.0);
        d[j] = two_pi_i * r * std::exp(two_pi_i * s);
        return d;
    };
    L.breaks = {0.0, 0.25, 0.5, 0.75, 1.0};
    return L;
}

CMatrix transport_fundamental(const Connection& omega, const LoopPath& path, double tol) {
    namespace odeint = boost::numeric::odeint;
    const int N = static_cast<int>(omega.c.size());
    using State = std::vector<cplx>;
    State y(N * N, 0.0);
    for (int k = 0; k < N; ++k) y[k * N + k] = 1.0;
    auto rhs = [&](const State& Y, State& dY, double s) {
        const Point x = path.x(s), v = path.dx(s);
        const auto Om = omega.evaluate(x);
        CMatrix A = CMatrix::Zero(N, N);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0.0) A += Om[k] * v[k];
        Eigen::Map<const CMatrix> L(Y.data(), N, N);
        Eigen::Map<CMatrix> D(dY.data(), N, N);
        D = A * L;
    };
    auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<State>());
    for (std::size_t k = 0; k + 1 < path.breaks.size(); ++k) {
        const double a = path.breaks[k], b = path.breaks[k + 1];
        odeint::integrate_adaptive(stepper, rhs, y, a, b, (b - a) / 64);
    }
    return Eigen::Map<CMatrix>(y.data(), N, N);
}

TransportResult monodromy_from_transport(const Connection& omega, const CMatrix& period, const LoopPath& path,
                                         double tol) {
    const CMatrix Phi = transport_fundamental(omega, path, tol);
    TransportResult r;
    r.raw = period.lu().solve(Phi * period);
    const int N = static_cast<int>(r.raw.rows());
    r.M = IMatrix::Zero(N, N);
    r.deviation = 0.0;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            const double re = std::round(r.raw(a, b).real());
            r.M(a, b) = static_cast<int>(re);
            r.deviation = std::max(r.deviation, std::abs(r.raw(a, b) - re));
        }
    return r;
}

TransportResult transport(int n, const Point& x0, const LoopLabel& q, const EvalSettings& s) {
    auto r = monodromy_from_transport(connection(n), build_matrix(n, x0, s).M, standard_loop(x0, q));
    if (r.deviation > 1e-4)
        throw DomainError("transport did not resolve an integer matrix (deviation " + std::to_string(r.deviation) + ")");
    return r;
}

Eigen::MatrixXd log_unipotent(const IMatrix& T) {
    const int N = static_cast<int>(T.rows());
    if (!is_unipotent(T, N)) throw DomainError("matrix is not unipotent");
    const Eigen::MatrixXd D = (T - IMatrix::Identity(N, N)).cast<double>();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(N, N), P = Eigen::MatrixXd::Identity(N, N);
    for (int k = 1; k <= N; ++k) {
        P = P * D;
        if (P.isZero()) break;
        L += ((k % 2) ? 1.0 : -1.0) / k * P;
    }
    return L;
}

IMatrix exp_nilpotent_int(const Eigen::MatrixXd& N) {
    const int n = static_cast<int>(N.rows());
    Eigen::MatrixXd E = Eigen::MatrixXd::Identity(n, n), P = E;
    double f = 1.0;
    for (int k = 1; k <= n; ++k) {
        P = P * N;
        f *= k;
        E += P / f;
    }
    return E.array().round().cast<int>().matrix();
}

}  // namespace mhs
