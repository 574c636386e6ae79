#include "mhs/dlog.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <tuple>

namespace mhs {

bool Factor::operator<(const Factor& o) const {
    return std::tie(kind, a, b) < std::tie(o.kind, o.a, o.b);
}

cplx Factor::value(const Point& x) const {
    if (kind == X) return x.at(a - 1);
    cplx p = 1.0;
    for (int k = a; k <= b; ++k) p *= x.at(k - 1);
    return 1.0 - p;
}

std::string Factor::str() const {
    if (kind == X) return "x" + std::to_string(a);
    std::string s = "1-";
    for (int k = a; k <= b; ++k) s += "x" + std::to_string(k);
    return s;
}

DlogSum& DlogSum::add(int coef, Factor f) {
    if (coef == 0) return *this;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), f,
                               [](const DlogTerm& t, const Factor& g) { return t.f < g; });
    if (it != terms_.end() && it->f == f) {
        it->coef += coef;
        if (it->coef == 0) terms_.erase(it);
    } else {
        terms_.insert(it, DlogTerm{coef, f});
    }
    return *this;
}

DlogSum& DlogSum::operator+=(const DlogSum& o) {
    for (const auto& t : o.terms_) add(t.coef, t.f);
    return *this;
}

DlogSum DlogSum::operator-() const {
    DlogSum r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

std::vector<cplx> DlogSum::gradient(const Point& x) const {
    std::vector<cplx> g(x.size(), 0.0);
    for (const auto& [c, f] : terms_) {
        if (f.kind == Factor::X) {
            g[f.a - 1] += static_cast<double>(c) / x[f.a - 1];
            continue;
        }
        cplx one_minus = f.value(x);
        if (one_minus == 0.0) throw DomainError("connection evaluated on the divisor " + f.str() + " = 0");
        for (int k = f.a; k <= f.b; ++k) {
            cplx rest = 1.0;
            for (int l = f.a; l <= f.b; ++l)
                if (l != k) rest *= x[l - 1];
            g[k - 1] -= static_cast<double>(c) * rest / one_minus;
        }
    }
    return g;
}

cplx DlogSum::directional(const Point& x, const Point& v) const {
    auto g = gradient(x);
    cplx s = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) s += g[k] * v[k];
    return s;
}

std::vector<cplx> poly_roots(std::vector<cplx> c) {
    double big = 0.0;
    for (cplx z : c) big = std::max(big, std::abs(z));
    while (!c.empty() && std::abs(c.back()) <= 1e-15 * big) c.pop_back();
    const int d = static_cast<int>(c.size()) - 1;
    if (d <= 0) return {};
    if (d == 1) return {-c[0] / c[1]};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 1; k < d; ++k) comp(k, k - 1) = 1.0;
    for (int k = 0; k < d; ++k) comp(k, d - 1) = -c[k] / c[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + d);
    for (cplx& r : roots) {
        for (int it = 0; it < 4; ++it) {
            cplx p = c[d], dp = 0.0;
            for (int k = d - 1; k >= 0; --k) {
                dp = dp * r + p;
                p = p * r + c[k];
            }
            if (dp == 0.0) break;
            cplx step = p / dp;
            r -= step;
            if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(r))) break;
        }
    }
    return roots;
}

LogForm DlogSum::pullback(const Point& p, const Point& v) const {
    LogForm out;
    for (const auto& [c, f] : terms_) {
        if (f.kind == Factor::X) {
            cplx vk = v[f.a - 1];
            if (vk != 0.0) out.terms.emplace_back(static_cast<double>(c), -p[f.a - 1] / vk);
            continue;
        }
        std::vector<cplx> poly{1.0};
        for (int k = f.a; k <= f.b; ++k) {
            std::vector<cplx> next(poly.size() + 1, 0.0);
            for (std::size_t m = 0; m < poly.size(); ++m) {
                next[m] += poly[m] * p[k - 1];
                next[m + 1] += poly[m] * v[k - 1];
            }
            poly = std::move(next);
        }
        for (auto& q : poly) q = -q;
        poly[0] += 1.0;
        for (cplx r : poly_roots(poly)) out.terms.emplace_back(static_cast<double>(c), r);
    }
    return out;
}

std::string DlogSum::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [c, f] : terms_) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        int a = std::abs(c);
        if (a != 1) s += std::to_string(a) + "*";
        s += "dlog(" + f.str() + ")";
    }
    return s;
}

}  // namespace mhs
