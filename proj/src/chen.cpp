#include "mhs/chen.hpp"

#include <algorithm>
#include <cmath>

namespace mhs {

namespace {

constexpr double kRatio = 0.35;   // step / distance to nearest pole
constexpr int kMaxTerms = 160;

// tolerances are relative to the magnitude of the point they guard
double mag(cplx a) { return std::max(1.0, std::abs(a)); }

// One Taylor step z -> z + h.  Poles closer than `at_tol` to z are treated as
// sitting exactly at z (allowed only where the lower integral vanishes).
void taylor_step(std::vector<cplx>& I, const std::vector<LogForm>& forms, cplx z, cplx h,
                 double at_tol) {
    const int K = static_cast<int>(forms.size());
    double q = 0.0;
    for (const auto& f : forms)
        for (const auto& [c, b] : f.terms)
            if (std::abs(z - b) > at_tol && c != 0.0) q = std::max(q, std::abs(h) / std::abs(z - b));
    int J = K + 2;
    if (q > 0.0) J += static_cast<int>(std::ceil(std::log(1e-19) / std::log(q))) + 2 * K;
    J = std::min(J, kMaxTerms);

    std::vector<std::vector<cplx>> e(K + 1, std::vector<cplx>(J, 0.0));
    e[0][0] = 1.0;
    std::vector<cplx> g(J);
    for (int k = 1; k <= K; ++k) {
        std::fill(g.begin(), g.end(), cplx(0.0));
        cplx sing = 0.0;
        for (const auto& [c, b] : forms[k - 1].terms) {
            if (c == 0.0) continue;
            if (std::abs(z - b) <= at_tol) {
                sing += c;
                continue;
            }
            cplx r = h / (z - b);
            cplx t = c * r;
            for (int j = 0; j < J; ++j) {
                g[j] += t;
                t *= -r;
            }
        }
        if (sing != 0.0 && std::abs(e[k - 1][0]) > 1e-300)
            throw DomainError("iterated integral diverges: form " + std::to_string(k) +
                              " has a pole at the path start");
        auto& ek = e[k];
        const auto& em = e[k - 1];
        ek[0] = I[k];
        for (int j = 0; j + 1 < J; ++j) {
            cplx acc = sing * em[j + 1];
            for (int l = 0; l <= j; ++l) acc += em[l] * g[j - l];
            ek[j + 1] = acc / static_cast<double>(j + 1);
        }
    }
    for (int k = 1; k <= K; ++k) {
        cplx sum = 0.0;
        for (int j = J - 1; j >= 0; --j) sum += e[k][j];
        I[k] = sum;
    }
}

void straight(std::vector<cplx>& I, const std::vector<LogForm>& forms, cplx u0, cplx u1,
              bool at_start, bool at_end) {
    const double tol0 = 1e-14 * mag(u0), tol1 = 1e-14 * mag(u1);
    bool end_pole = false;
    for (std::size_t k = 0; k < forms.size(); ++k)
        for (const auto& [c, b] : forms[k].terms) {
            if (c == 0.0) continue;
            if (std::abs(b - u1) <= tol1) {
                if (!at_end) throw GeometryError("integration path passes through a pole at a vertex");
                if (k + 1 == forms.size())
                    throw DomainError("iterated integral diverges: last form has a pole at the path end");
                end_pole = true;
            }
            if (!at_start && std::abs(b - u0) <= tol0)
                throw GeometryError("integration path passes through a pole at a vertex");
        }

    cplx z = u0;
    bool first = at_start;
    for (int guard = 0; guard < 100000; ++guard) {
        cplx rem = u1 - z;
        double rl = std::abs(rem);
        if (end_pole ? rl <= 0.2 * tol1 : rl == 0.0) return;
        double d = INFINITY;
        for (const auto& f : forms)
            for (const auto& [c, b] : f.terms) {
                if (c == 0.0) continue;
                double dist = std::abs(z - b);
                if (first && dist <= tol0) continue;
                d = std::min(d, dist);
            }
        cplx h = (rl <= kRatio * d) ? rem : rem * (kRatio * d / rl);
        taylor_step(I, forms, z, h, first ? tol0 : 0.0);
        z = (h == rem) ? u1 : z + h;
        first = false;
    }
    throw GeometryError("iterated integral: step budget exhausted");
}

}  // namespace

void chen_advance(std::vector<cplx>& I, const std::vector<LogForm>& forms, cplx u0, cplx u1,
                  const EvalSettings& s, bool at_start, bool at_end) {
    if (I.size() != forms.size() + 1) throw UsageError("chen_advance: state size mismatch");
    if (forms.empty() || u0 == u1) return;
    const cplx dir = (u1 - u0) / std::abs(u1 - u0);

    // poles lying on the open segment: (arclength from u0, distance to u1, pole)
    struct Hit {
        double p, q;
        cplx b;       // foot on the segment
        double perp;  // distance of the pole from it
    };
    std::vector<Hit> hits;
    std::vector<cplx> all;
    for (const auto& f : forms)
        for (const auto& [c, b] : f.terms)
            if (c != 0.0) all.push_back(b);
    // poles within clearance of the segment count as on it, so the branch does
    // not jump under small moves of the letters
    for (cplx b : all) {
        const cplx w0 = (b - u0) / dir, w1 = (u1 - b) / dir;
        const double perp = w0.imag();
        if (std::abs(perp) <= s.clearance * mag(b) && w0.real() > 1e-14 * mag(u0) && w1.real() > 1e-14 * mag(u1))
            hits.push_back({w0.real(), w1.real(), b - cplx(0.0, perp) * dir, std::abs(perp)});
    }
    if (hits.empty()) {
        straight(I, forms, u0, u1, at_start, at_end);
        return;
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.q > b.q; });
    hits.erase(std::unique(hits.begin(), hits.end(),
                           [](const Hit& a, const Hit& b) { return std::abs(a.b - b.b) <= 1e-14 * mag(b.b); }),
               hits.end());

    const double side = (s.side == BranchSide::below) ? -1.0 : 1.0;
    const cplx up = cplx(0.0, side) * dir;
    std::vector<cplx> verts{u0};
    for (const auto& h : hits) {
        const cplx b = h.b;
        double r = 2.0 * s.clearance * mag(b);
        r = std::min(r, 0.5 * h.p);
        r = std::min(r, 0.5 * h.q);
        for (cplx o : all)
            if (std::abs(o - b) > std::max(1e-13 * mag(b), 1.5 * h.perp)) r = std::min(r, 0.5 * std::abs(o - b));
        if (r <= 1.5 * h.perp) continue;  // too crowded to enclose: left to the straight stepping
        verts.push_back(b - r * dir);
        verts.push_back(b - r * dir + r * up);
        verts.push_back(b + r * dir + r * up);
        verts.push_back(b + r * dir);
    }
    verts.push_back(u1);
    for (std::size_t k = 0; k + 1 < verts.size(); ++k)
        straight(I, forms, verts[k], verts[k + 1], at_start && k == 0, at_end && k + 2 == verts.size());
}

cplx iterated_integral(const std::vector<cplx>& letters, const std::vector<cplx>& path,
                       const EvalSettings& s) {
    if (letters.empty()) return 1.0;
    if (path.size() < 2) throw UsageError("iterated_integral: path needs two vertices");
    std::vector<LogForm> forms;
    for (cplx a : letters) forms.push_back(LogForm::letter(a));
    std::vector<cplx> I(forms.size() + 1, 0.0);
    I[0] = 1.0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        chen_advance(I, forms, path[k], path[k + 1], s, k == 0, k + 2 == path.size());
    return I.back();
}

}  // namespace mhs
