#include "mhs/variation.hpp"

#include <algorithm>
#include <cmath>

#include "mhs/chen.hpp"
#include "mhs/polylog.hpp"

namespace mhs {

cplx word_entry(const WordSystem& w, int row, int col, const EvalSettings& s) {
    const auto& rw = w.rows.at(row);
    const auto& cv = w.rows.at(col);
    if (!std::includes(rw.begin(), rw.end(), cv.begin(), cv.end())) return 0.0;
    const int K = static_cast<int>(w.letters.size());
    auto at = [&](int p) -> cplx { return p == 0 ? cplx(0.0) : p == K + 1 ? cplx(1.0) : w.letters[p - 1]; };
    std::vector<int> ends{0};
    ends.insert(ends.end(), cv.begin(), cv.end());
    ends.push_back(K + 1);
    cplx prod = 1.0;
    int nonzero = 0;
    for (std::size_t r = 0; r + 1 < ends.size(); ++r) {
        std::vector<cplx> between;
        for (int p : rw)
            if (p > ends[r] && p < ends[r + 1]) {
                between.push_back(at(p));
                if (at(p) != 0.0) ++nonzero;
            }
        if (between.empty()) continue;
        prod *= iterated_integral(at(ends[r]), between, at(ends[r + 1]), s);
    }
    return (nonzero % 2 ? -1.0 : 1.0) * prod * std::pow(two_pi_i, static_cast<int>(cv.size()));
}

CMatrix word_matrix(const WordSystem& w, const EvalSettings& s) {
    const int N = static_cast<int>(w.rows.size());
    CMatrix M = CMatrix::Zero(N, N);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c <= r; ++c) M(r, c) = word_entry(w, r, c, s);
    return M;
}

WordSystem multilog_system(int n, const Point& x) {
    auto a = a_coords(x);
    WordSystem w;
    w.letters.assign(a.begin() + 1, a.begin() + 1 + n);
    for (const auto& i : all_indices(n)) w.rows.push_back(i.slots());
    return w;
}

void check_off_divisor(const Point& x) {
    const int n = static_cast<int>(x.size());
    for (int a = 1; a <= n; ++a) {
        if (std::abs(x[a - 1]) < 1e-14) throw DomainError("point lies on the divisor x" + std::to_string(a) + " = 0");
        for (int b = a; b <= n; ++b) {
            Factor f = Factor::one_minus(a, b);
            if (std::abs(f.value(x)) < 1e-14) throw DomainError("point lies on the divisor " + f.str() + " = 0");
        }
    }
}

cplx entry(const Index& i, const Index& j, const Point& x, const EvalSettings& s) {
    if (!precedes(j, i)) return 0.0;
    check_off_divisor(x);
    auto w = multilog_system(i.n(), x);
    auto all = all_indices(i.n());
    int r = static_cast<int>(std::find(all.begin(), all.end(), i) - all.begin());
    int c = static_cast<int>(std::find(all.begin(), all.end(), j) - all.begin());
    return word_entry(w, r, c, s) / std::pow(two_pi_i, j.weight());
}

cplx entry_product_form(const Index& i, const Index& j, const Point& x, const EvalSettings& s) {
    if (!precedes(j, i)) return 0.0;
    check_off_divisor(x);
    auto a = a_coords(x);
    const int n = i.n();
    auto tau = i.slots();
    std::vector<int> t{0};
    for (int v : j.slots()) t.push_back(v);
    t.push_back(n + 1);
    cplx prod = 1.0;
    for (std::size_t r = 0; r + 1 < t.size(); ++r) {
        std::vector<int> mid;
        for (int v : tau)
            if (v > t[r] && v < t[r + 1]) mid.push_back(v);
        if (mid.empty()) continue;
        mid.push_back(t[r + 1]);
        cplx base = a[t[r]];
        Point z;
        for (std::size_t m = 0; m + 1 < mid.size(); ++m) z.push_back((a[mid[m + 1]] - base) / (a[mid[m]] - base));
        prod *= frak_l(z, s);
    }
    return prod;
}

VariationMatrix build_matrix(int n, const Point& x, const EvalSettings& s) {
    if (static_cast<int>(x.size()) != n) throw UsageError("point dimension differs from n");
    check_off_divisor(x);
    VariationMatrix vm;
    vm.n = n;
    vm.x = x;
    vm.M = word_matrix(multilog_system(n, x), s);
    for (const auto& i : all_indices(n)) vm.tau.push_back(i.weight());
    return vm;
}

std::vector<CMatrix> Connection::evaluate(const Point& x) const {
    const int N = static_cast<int>(c.size());
    std::vector<CMatrix> out(x.size(), CMatrix::Zero(N, N));
    for (int r = 0; r < N; ++r)
        for (int q = 0; q < N; ++q) {
            if (c[r][q].empty()) continue;
            auto g = c[r][q].gradient(x);
            for (std::size_t k = 0; k < x.size(); ++k) out[k](r, q) = g[k];
        }
    return out;
}

Eigen::MatrixXi Connection::residue(const Factor& f) const {
    const int N = static_cast<int>(c.size());
    Eigen::MatrixXi R = Eigen::MatrixXi::Zero(N, N);
    for (int r = 0; r < N; ++r)
        for (int q = 0; q < N; ++q)
            for (const auto& t : c[r][q].terms())
                if (t.f == f) R(r, q) = t.coef;
    return R;
}

Connection connection(int n) {
    auto all = all_indices(n);
    const int N = static_cast<int>(all.size());
    Connection om;
    om.n = n;
    om.c.assign(N, std::vector<DlogSum>(N));
    for (int r = 0; r < N; ++r) {
        auto tau = all[r].slots();
        for (std::size_t s = 0; s < tau.size(); ++s) {
            Index j(n, all[r].mask() & ~(1u << (tau[s] - 1)));
            int q = static_cast<int>(std::find(all.begin(), all.end(), j) - all.begin());
            om.c[r][q] = w_form(static_cast<int>(s) + 1, all[r]);
        }
    }
    return om;
}

double flatness_residual(const std::function<CMatrix(const Point&)>& build, const Connection& omega,
                         const Point& x, double h) {
    const CMatrix M = build(x);
    const auto Om = omega.evaluate(x);
    double res = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
        for (cplx dir : {cplx(1.0), cplx(0.0, 1.0)}) {
            Point xp = x, xm = x;
            xp[k] += h * dir;
            xm[k] -= h * dir;
            CMatrix d = (build(xp) - build(xm)) / (2.0 * h);
            CMatrix expect = dir * Om[k] * M;
            res = std::max(res, (d - expect).cwiseAbs().maxCoeff());
        }
    return res;
}

double verify_flatness(int n, const Point& x, double h, const EvalSettings& s) {
    return flatness_residual([&](const Point& p) { return build_matrix(n, p, s).M; }, connection(n), x, h);
}

IntegrabilityReport verify_integrability(const Connection& omega, const Point& x) {
    IntegrabilityReport rep;
    // every entry is an integer combination of dlog(catalog factor), hence closed
    for (const auto& row : omega.c)
        for (const auto& e : row)
            for (const auto& t : e.terms())
                if (t.f.kind == Factor::OneMinus && (t.f.a < 1 || t.f.b < t.f.a)) rep.d_omega = 1.0;
    const auto Om = omega.evaluate(x);
    const double h = 1e-5;
    for (std::size_t k = 0; k < x.size(); ++k)
        for (std::size_t l = 0; l < x.size(); ++l) {
            if (k == l) continue;
            rep.wedge = std::max(rep.wedge, (Om[k] * Om[l] - Om[l] * Om[k]).cwiseAbs().maxCoeff());
            // ∂_l Ω_k = ∂_k Ω_l
            Point xp = x, xm = x, yp = x, ym = x;
            xp[l] += h, xm[l] -= h, yp[k] += h, ym[k] -= h;
            CMatrix a = (omega.evaluate(xp)[k] - omega.evaluate(xm)[k]) / (2 * h);
            CMatrix b = (omega.evaluate(yp)[l] - omega.evaluate(ym)[l]) / (2 * h);
            rep.mixed_partials = std::max(rep.mixed_partials, (a - b).cwiseAbs().maxCoeff());
        }
    return rep;
}

FiltrationSpec filtration(int n) {
    auto all = all_indices(n);
    FiltrationSpec f;
    f.n = n;
    f.weight_basis.resize(n + 2);
    f.hodge_basis.resize(n + 2);
    for (int k = 0; k <= n + 1; ++k)
        for (int p = 0; p < static_cast<int>(all.size()); ++p) {
            if (all[p].weight() >= k) f.weight_basis[k].push_back(p);
            if (all[p].weight() <= k) f.hodge_basis[k].push_back(p);
        }
    return f;
}

std::vector<int> graded_dims(int n) {
    std::vector<int> d(n + 1, 0);
    for (const auto& i : all_indices(n)) ++d[i.weight()];
    return d;
}

std::vector<int> hodge_weight_intersection(int n, int p, int k) {
    std::vector<int> out;
    auto all = all_indices(n);
    for (int q = 0; q < static_cast<int>(all.size()); ++q)
        if (all[q].weight() >= k && all[q].weight() <= p) out.push_back(q);
    return out;
}

CMatrix tau_matrix(const std::vector<int>& tau, cplx lambda) {
    CMatrix T = CMatrix::Zero(tau.size(), tau.size());
    for (std::size_t k = 0; k < tau.size(); ++k) T(k, k) = std::pow(lambda, tau[k]);
    return T;
}

}  // namespace mhs
