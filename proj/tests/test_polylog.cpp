#include <cmath>
#include <random>

#include "doctest.h"
#include "mhs/chen.hpp"
#include "mhs/polylog.hpp"
#include "oracles.hpp"

using namespace mhs;

namespace {

// plain power sum, independent of the library
cplx li_direct(int m, cplx z) {
    cplx s = 0.0, zk = 1.0;
    for (int k = 1; k < 4000; ++k) {
        zk *= z;
        s += zk / std::pow(double(k), m);
    }
    return s;
}

// brute-force nested sums for depth 2 and 3
cplx li2_direct(int m1, int m2, cplx x, cplx y, int K = 400) {
    cplx s = 0.0, inner = 0.0, xp = 1.0, yp = 1.0;
    for (int k = 1; k < K; ++k) {
        yp *= y;
        s += inner * yp / std::pow(double(k), m2);
        xp *= x;
        inner += xp / std::pow(double(k), m1);
    }
    return s;
}

cplx li111_direct(cplx x, cplx y, cplx z, int K = 400) {
    cplx s = 0.0, s1 = 0.0, s2 = 0.0, xp = 1.0, yp = 1.0, zp = 1.0;
    for (int k = 1; k < K; ++k) {
        xp *= x, yp *= y, zp *= z;
        s += s2 * zp / double(k);
        s2 += s1 * yp / double(k);
        s1 += xp / double(k);
    }
    return s;
}

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) < tol; }

}  // namespace

TEST_CASE("zeta and bernoulli") {
    CHECK(zeta(2) == doctest::Approx(pi * pi / 6).epsilon(1e-15));
    CHECK(std::abs(zeta(3) - 1.2020569031595942854) < 1e-15);
    CHECK(std::abs(zeta(5) - 1.0369277551433699263) < 1e-15);
    CHECK(std::abs(zeta(7) - 1.0083492773819228268) < 1e-15);
    CHECK(zeta(0) == doctest::Approx(-0.5));
    CHECK(zeta(-1) == doctest::Approx(-1.0 / 12));
    CHECK(zeta(-2) == doctest::Approx(0.0));
    CHECK(bernoulli(30) == doctest::Approx(8615841276005.0 / 14322.0).epsilon(1e-13));
}

TEST_CASE("classical polylog on the principal branch") {
    CHECK(close(classical_li(1, 0.5), std::log(2.0), 1e-15));
    CHECK(close(classical_li(2, -1.0), -pi * pi / 12, 1e-14));
    CHECK(close(classical_li(3, 1.0), 1.2020569031595942854, 1e-14));
    CHECK(close(classical_li(2, 0.5), pi * pi / 12 - std::log(2.0) * std::log(2.0) / 2, 1e-14));
    CHECK(close(classical_li(2, cplx(0, 1)).imag(), 0.915965594177219015, 1e-14));

    // frozen values from an independent arbitrary-precision evaluation
    CHECK(close(classical_li(2, 3.0, BranchSide::below), {2.3201804233130983964, -3.4513922952232026614}, 1e-13));
    CHECK(close(classical_li(2, 3.0, BranchSide::above), {2.3201804233130983964, 3.4513922952232026614}, 1e-13));
    CHECK(close(classical_li(2, {-5, 2}), {-2.8234151891398926454, 0.70423923364301746816}, 1e-13));
    CHECK(close(classical_li(3, {0.9, 0.8}), {0.84410853062829872446, 1.0138849959358772662}, 1e-13));
    CHECK(close(classical_li(4, {-1.5, -0.7}), {-1.404730991467239754, -0.60449085335969379986}, 1e-13));
    CHECK(close(classical_li(3, {1.2, 0.3}), {1.4157585950920146354, 0.52130599038499009054}, 1e-13));
    CHECK(close(classical_li(5, {0.3, 1.7}), {0.20962945750238716151, 1.7120959339116501019}, 1e-13));
    CHECK(close(classical_li(2, {0.99, -0.05}), {1.5401170207974555127, -0.18836530670926067537}, 1e-13));
    CHECK(close(classical_li(3, 2.0, BranchSide::above), {2.76207190622892413594, 0.75469382946024813886}, 1e-13));

    CHECK_THROWS_AS(classical_li(2, 3.0), DomainError);
    CHECK_THROWS_AS(classical_li(1, 1.0), DomainError);
}

TEST_CASE("classical polylog agrees with the power series in the disc") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-0.68, 0.68);
    for (int k = 0; k < 50; ++k) {
        cplx z(u(rng), u(rng));
        for (int m = 1; m <= 5; ++m) CHECK(close(classical_li(m, z), li_direct(m, z), 1e-13));
    }
}

TEST_CASE("iterated integrals") {
    CHECK(iterated_integral({}, {0.0, 0.4}) == cplx(1.0));
    CHECK(close(iterated_integral({1.0}, {0.0, 0.3}), std::log(0.7), 1e-15));
    // Li_2(1/2) = -I(0; 2, 0; 1)
    CHECK(close(-iterated_integral({2.0, 0.0}, {0.0, 1.0}), 0.58224052646501250590, 1e-14));
    // pole on the path: side selects the branch of log
    EvalSettings above, below;
    below.side = BranchSide::below;
    cplx up = iterated_integral({0.5}, {0.0, 1.0}, above);
    cplx dn = iterated_integral({0.5}, {0.0, 1.0}, below);
    CHECK(close(up, cplx(0, -pi), 1e-12));
    CHECK(close(dn, cplx(0, pi), 1e-12));
    // homotopic paths
    cplx a = iterated_integral({0.4, cplx(0.5, 0.5), 0.0}, {0.0, cplx(0.5, -0.3), 1.0});
    cplx b = iterated_integral({0.4, cplx(0.5, 0.5), 0.0}, {0.0, cplx(0.2, -0.6), cplx(0.9, -0.1), 1.0});
    CHECK(close(a, b, 1e-12));
    CHECK_THROWS_AS(iterated_integral({0.0}, {0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(iterated_integral({1.0}, {0.0, 1.0}), DomainError);
}

TEST_CASE("multiple zeta values") {
    // Σ_{j<k} 1/(j k^2) with the harmonic tail bound
    double s = 0.0, H = 0.0;
    const int K = 2000000;
    for (int k = 1; k <= K; ++k) {
        s += H / (double(k) * k);
        H += 1.0 / k;
    }
    s += (std::log(double(K)) + 0.5772156649015329 + 1.0) / K;
    CHECK(std::abs(mzv({1, 2}) - s) < 1e-9);
    CHECK(std::abs(mzv({1, 2}) - 1.2020569031595942854) < 1e-11);
    CHECK(std::abs(mzv({2}) - pi * pi / 6) < 1e-12);
    // ζ(1,1,2) = ζ(4)
    CHECK(std::abs(mzv({1, 1, 2}) - std::pow(pi, 4) / 90) < 1e-11);
    CHECK(std::abs(mzv({2, 2}) - std::pow(pi, 4) / 120) < 1e-11);
    CHECK_THROWS_AS(mzv({2, 1}), DomainError);
}

TEST_CASE("series") {
    CHECK(close(li_series({1}, {0.5}), std::log(2.0), 1e-14));
    CHECK(li_series({2, 3}, {0.4, 0.0}) == cplx(0.0));
    CHECK(std::abs(li_series({1, 2}, {1.0, 1.0}) - 1.2020569031595942854) < 1e-10);
    CHECK_THROWS_AS(li_series({1}, {1.2}), DomainError);
    CHECK_THROWS_AS(li_series({2, 1}, {1.0, 1.0}), DomainError);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int k = 0; k < 20; ++k) {
        cplx x(u(rng), u(rng)), y(u(rng), u(rng));
        CHECK(close(li_series({2, 1}, {x, y}), li2_direct(2, 1, x, y), 1e-13));
        CHECK(close(li_series({1, 2}, {x, y}), li_iterated({1, 2}, {x, y}), 1e-13));
    }
}

TEST_CASE("H") {
    CHECK(close(h_aux(0.3, 0.3), -std::log(0.3), 1e-15));
    CHECK(close(h_aux(0.5, 0.25), 0.28768207245178092744, 1e-14));
    cplx x(0.2, 0.1), y(-0.3, 0.4), e = 1e-6;
    cplx dy = (h_aux(x, y + e) - h_aux(x, y - e)) / (2.0 * e);
    CHECK(close(dy, 1.0 / (1.0 - y), 1e-8));
}

TEST_CASE("chain formula against the series") {
    CHECK(close(multilog({cplx(0.5)}), -std::log(0.5), 1e-14));
    CHECK(close(multilog({0.3, 0.4}), li2_direct(1, 1, 0.3, 0.4), 1e-13));
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> r(0.0, 0.7), th(0.0, 2 * pi);
    for (int k = 0; k < 20; ++k) {
        Point x;
        for (int d = 0; d < 3; ++d) x.push_back(std::polar(r(rng), th(rng)));
        CHECK(close(multilog(x), li111_direct(x[0], x[1], x[2], 300), 1e-12));
    }
}

TEST_CASE("chain formula is path independent within a homotopy class") {
    Point x{cplx(0.4, 0.2), cplx(-0.3, 0.5)};
    std::vector<Point> bent{Point{0.0, 0.0}, Point{cplx(0.1, -0.2), cplx(0.2, 0.1)}, x};
    CHECK(close(multilog(x), multilog(x, bent), 1e-12));
}

TEST_CASE("double log at x = 1") {
    for (double y : {0.2, 0.5, 0.8}) {
        cplx l1 = -std::log(1.0 - y);
        CHECK(close(li_iterated({1, 1}, {1.0, y}), l1 * l1 / 2.0, 1e-12));
    }
}

TEST_CASE("triple logarithm display termwise") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> r(0.0, 0.8), th(0.0, 2 * pi);
    for (int k = 0; k < 20; ++k) {
        Point x;
        for (int d = 0; d < 3; ++d) x.push_back(std::polar(r(rng), th(rng)));
        const auto disp = oracle::li111_display_terms(x);
        const auto chain = multilog_terms(x);
        cplx sum = 0.0;
        for (int t = 0; t < 6; ++t) {
            CHECK(close(disp[t], chain[oracle::kChainOf[t]], 1e-11));
            sum += disp[t];
        }
        CHECK(close(sum, li_series({1, 1, 1}, x), 1e-11));
    }
}

TEST_CASE("Euler double sum oracle") {
    CHECK(std::abs(oracle::euler_double_sum(200000) - 1.2020569031595942854) < 1e-9);
    CHECK(std::abs(mzv({1, 2}) - oracle::euler_double_sum(200000)) < 1e-9);
}
