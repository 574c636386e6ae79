#include "mhs/polylog.hpp"

#include <array>
#include <cmath>

#include "mhs/chen.hpp"

namespace mhs {

void check_multi_index(const MultiIndex& m) {
    if (m.empty()) throw UsageError("multi-index must be non-empty");
    for (int v : m)
        if (v < 1) throw UsageError("multi-index entries must be positive");
}

namespace {

double zeta_direct(int s) {
    double z = 0.0;
    for (int k = 80; k >= 1; --k) z += std::pow(static_cast<double>(k), -s);
    return z;
}

const std::vector<double>& small_bernoulli() {
    static const std::vector<double> b = [] {
        std::vector<long double> B(25, 0.0L);
        B[0] = 1.0L;
        for (int m = 1; m <= 24; ++m) {
            long double acc = 0.0L, binom = 1.0L;  // C(m+1, k)
            for (int k = 0; k < m; ++k) {
                acc += binom * B[k];
                binom = binom * (m + 1 - k) / (k + 1);
            }
            B[m] = -acc / (m + 1);
        }
        return std::vector<double>(B.begin(), B.end());
    }();
    return b;
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

double bernoulli(int k) {
    if (k < 0) throw UsageError("bernoulli index must be non-negative");
    if (k > 1 && k % 2) return 0.0;
    if (k <= 24) return small_bernoulli()[k];
    // B_{2n} = (-1)^{n+1} 2 (2n)! ζ(2n) / (2π)^{2n}
    double v = 2.0 * zeta_direct(k);
    for (int j = 1; j <= k; ++j) v *= j / (2.0 * pi);
    return ((k / 2) % 2 == 1) ? v : -v;
}

double zeta(int s) {
    if (s == 1) throw DomainError("zeta has a pole at 1");
    if (s <= 0) {
        int n = -s;
        return ((n % 2) ? -1.0 : 1.0) * bernoulli(n + 1) / (n + 1);
    }
    if (s >= 30) return zeta_direct(s);
    // Euler-Maclaurin with N = 12
    const int N = 12;
    double z = 0.0;
    for (int k = 1; k < N; ++k) z += std::pow(static_cast<double>(k), -s);
    const double Nd = N;
    z += std::pow(Nd, 1.0 - s) / (s - 1) + 0.5 * std::pow(Nd, -s);
    double rising = s;  // s(s+1)...(s+2j-2)
    for (int j = 1; j <= 10; ++j) {
        z += bernoulli(2 * j) / factorial(2 * j) * rising * std::pow(Nd, -s - 2 * j + 1);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
    }
    return z;
}

cplx bernoulli_poly(int m, cplx t) {
    cplx r = 0.0;
    double binom = 1.0;
    for (int k = 0; k <= m; ++k) {
        r += binom * bernoulli(k) * std::pow(t, m - k);
        binom = binom * (m - k) / (k + 1);
    }
    return r;
}

cplx classical_li(int m, cplx z, BranchSide side) {
    if (m < 1) throw UsageError("classical_li requires m >= 1");
    if (z.imag() == 0.0 && (z.real() > 1.0 || (m == 1 && z.real() == 1.0))) {
        if (z.real() == 1.0) throw DomainError("Li_1 diverges at 1");
        if (side == BranchSide::none)
            throw DomainError("point on the branch cut [1, inf) needs a side (+i0 or -i0)");
        z = cplx(z.real(), side == BranchSide::above ? 0.0 : -0.0);
    }
    if (z == 0.0) return 0.0;
    if (m == 1) return -std::log(1.0 - z);
    if (z == 1.0) return zeta(m);
    const double r = std::abs(z);
    if (r <= 0.5) {
        cplx sum = 0.0, zk = z;
        for (int k = 1; k < 200; ++k) {
            cplx term = zk / std::pow(static_cast<double>(k), m);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
            zk *= z;
        }
        return sum;
    }
    if (r >= 2.0) {
        // Li_m(z) + (-1)^m Li_m(1/z) = -(2πi)^m/m! B_m(1/2 + log(-z)/(2πi))
        cplx inv = classical_li(m, 1.0 / z);
        cplx rhs = -std::pow(two_pi_i, m) / factorial(m) * bernoulli_poly(m, 0.5 + std::log(-z) / two_pi_i);
        return rhs - ((m % 2) ? -1.0 : 1.0) * inv;
    }
    // expansion in μ = log z, |μ| < 2π
    const cplx mu = std::log(z);
    double harmonic = 0.0;
    for (int k = 1; k < m; ++k) harmonic += 1.0 / k;
    cplx sum = 0.0, muk = 1.0;
    double kfact = 1.0;
    for (int k = 0; k < 120; ++k) {
        if (k > 0) {
            muk *= mu;
            kfact *= k;
        }
        cplx term;
        if (k == m - 1) term = muk / kfact * (harmonic - std::log(-mu));
        else term = zeta(m - k) * muk / kfact;
        sum += term;
        if (k > m + 2 && term != 0.0 && std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    }
    return sum;
}

std::vector<cplx> li_letters(const MultiIndex& m, const Point& x) {
    check_multi_index(m);
    if (x.size() != m.size()) throw UsageError("multi-index and point differ in depth");
    auto a = a_coords(x);
    std::vector<cplx> letters;
    for (std::size_t i = 0; i < m.size(); ++i) {
        letters.push_back(a[i + 1]);
        for (int z = 1; z < m[i]; ++z) letters.push_back(0.0);
    }
    return letters;
}

cplx li_iterated(const MultiIndex& m, const Point& x, const EvalSettings& s) {
    auto letters = li_letters(m, x);
    double sign = (m.size() % 2) ? -1.0 : 1.0;
    return sign * iterated_integral(letters, {0.0, 1.0}, s);
}

cplx li_series(const MultiIndex& m, const Point& x, const EvalSettings& s) {
    check_multi_index(m);
    const std::size_t n = m.size();
    if (x.size() != n) throw UsageError("multi-index and point differ in depth");
    double rmax = 0.0;
    bool boundary = false;
    for (cplx v : x) {
        double a = std::abs(v);
        if (a > 1.0 + 1e-15) throw DomainError("series diverges: |x_i| > 1");
        if (a >= 1.0 - 1e-15) boundary = true;
        rmax = std::max(rmax, a);
    }
    if (x[n - 1] == 0.0) return 0.0;
    if (boundary) {
        if (m[n - 1] < 2) throw DomainError("series diverges on the boundary when m_n = 1");
        return li_iterated(m, x, s);
    }
    // P[d] = Σ_{k_1<...<k_d<=k} Π_{i<=d} x_i^{k_i}/k_i^{m_i}
    std::vector<cplx> P(n + 1, 0.0), pw(n, 1.0);
    P[0] = 1.0;
    for (long k = 1; k <= s.max_terms; ++k) {
        double biggest = 0.0;
        for (std::size_t d = n; d >= 1; --d) {
            pw[d - 1] *= x[d - 1];
            cplx inc = P[d - 1] * pw[d - 1] / std::pow(static_cast<double>(k), m[d - 1]);
            P[d] += inc;
            biggest = std::max(biggest, std::abs(inc) + std::abs(pw[d - 1]) * std::abs(P[d - 1]) / k);
        }
        if (k > 8 && biggest * (1.0 / (1.0 - rmax)) < s.series_tol * std::max(1.0, std::abs(P[n]))) break;
    }
    return P[n];
}

double mzv(const MultiIndex& m, const EvalSettings& s) {
    check_multi_index(m);
    if (m.back() < 2) throw DomainError("multiple zeta value diverges when the last index is 1");
    return li_iterated(m, Point(m.size(), 1.0), s).real();
}

cplx frak_l(const Point& y, const EvalSettings& s) {
    if (y.empty()) return 1.0;
    return li_iterated(MultiIndex(y.size(), 1), y, s);
}

cplx h_aux(cplx x, cplx y) {
    if (x == 0.0 || x == 1.0 || y == 1.0) throw DomainError("H is singular at x = 0, x = 1 or y = 1");
    return -std::log(1.0 - y) + std::log(1.0 - x) - std::log(x);
}

DlogSum w_form(int t, const Index& i) {
    auto tau = i.slots();
    const int k = static_cast<int>(tau.size());
    if (t < 1 || t > k) throw UsageError("w_form: form index out of range");
    tau.push_back(i.n() + 1);
    auto one_minus_y = [&](int m) { return Factor::one_minus(tau[m - 1], tau[m] - 1); };
    DlogSum w;
    w.add(-1, one_minus_y(t));
    if (t >= 2) {
        w.add(1, one_minus_y(t - 1));
        for (int a = tau[t - 2]; a < tau[t - 1]; ++a) w.add(-1, Factor::x(a));
    }
    return w;
}

namespace {

void check_regular(const Point& x) {
    const int n = static_cast<int>(x.size());
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
            Factor f = Factor::one_minus(a, b);
            if (std::abs(f.value(x)) < 1e-14)
                throw DomainError("point lies on the singular locus " + f.str() + " = 0");
        }
}

}  // namespace

std::vector<cplx> multilog_terms(const Point& x, const std::vector<Point>& path_in, const EvalSettings& s) {
    const int n = static_cast<int>(x.size());
    if (n == 0) return {1.0};
    check_regular(x);
    std::vector<Point> path = path_in;
    if (path.empty()) path = {Point(n, 0.0), x};
    for (cplx c : path.front())
        if (c != 0.0) throw UsageError("multilog path must start at the origin");
    for (std::size_t d = 0; d < x.size(); ++d)
        if (std::abs(path.back()[d] - x[d]) > 1e-15 * std::max(1.0, std::abs(x[d])))
            throw UsageError("multilog path must end at x");

    std::vector<cplx> out;
    for (const auto& chain : maximal_chains(n)) {
        auto f = position_functions(chain);
        std::vector<DlogSum> forms;
        std::uint32_t mask = 0;
        for (int t = 0; t < n; ++t) {
            mask |= 1u << (chain[t] - 1);
            forms.push_back(w_form(f[t], Index(n, mask)));
        }
        std::vector<cplx> I(n + 1, 0.0);
        I[0] = 1.0;
        for (std::size_t seg = 0; seg + 1 < path.size(); ++seg) {
            Point v(n);
            for (int d = 0; d < n; ++d) v[d] = path[seg + 1][d] - path[seg][d];
            std::vector<LogForm> pulled;
            for (const auto& w : forms) pulled.push_back(w.pullback(path[seg], v));
            chen_advance(I, pulled, 0.0, 1.0, s, seg == 0, false);
        }
        out.push_back(I[n]);
    }
    return out;
}

cplx multilog(const Point& x, const std::vector<Point>& path, const EvalSettings& s) {
    cplx sum = 0.0;
    for (cplx t : multilog_terms(x, path, s)) sum += t;
    return sum;
}

}  // namespace mhs
