#pragma once

#include <string>
#include <vector>

#include "mhs/variation.hpp"
#include "mhs/weight3.hpp"

namespace mhs {

struct SVMatrix {
    int n = 0;
    CMatrix B;
    CMatrix logB;
    Point x;
    // max of |conj(B) B - I|, |conj(logB) + logB| and |(B - I)^{w+1}|
    double invariant_dev = 0.0;
};

// B = τ(i) 𝓜 conj(𝓜)⁻¹ τ(i) and its nilpotent logarithm; tau gives |j| per column
SVMatrix sv_matrix(const CMatrix& M, const std::vector<int>& tau, const Point& x = {});
SVMatrix sv_matrix(int n, const Point& x, const EvalSettings& s = {});

// nilpotent log of a unipotent matrix by the finite series
CMatrix log_unipotent_series(const CMatrix& B);

double sv_dilog(cplx z);   // Bloch-Wigner 𝓛₂, 0 at z = 0, 1
double sv_trilog(cplx z);  // 𝓛₃
// 𝓛₁,₁ from Im Li₁,₁ plus logarithms, and from three 𝓛₂ values
double sv_doublelog(cplx x, cplx y);
double sv_doublelog_dilogs(cplx x, cplx y);
// the last factor of 𝓛₁,₂ is log|1-y|; with log|x(1-y)| the form is off by
// (1/3) log|x| log|y| log|1-xy| from log B and the sum identity fails
double sv_12(cplx x, cplx y);
double sv_21(cplx x, cplx y);

// -1/(2i) times the lower left entry of log B
double sv_from_matrix(int n, const Point& x, const EvalSettings& s = {});
double sv_from_matrix(const CMatrix& M, const std::vector<int>& tau);

struct IdentityReport {
    std::string id;
    std::string description;
    std::vector<Point> points;
    std::vector<double> residuals;
    double max_residual = 0.0;
};

struct GridSpec {
    int points = 100;
    unsigned seed = 7;
};

// identities a-i; ids "llsing2", "fe11", "six_term", "sum", "eight_term",
// "zagier", "li11", "li21", "li12_li21"
std::vector<std::string> identity_ids();
IdentityReport run_identity(const std::string& id, const GridSpec& g = {});
std::vector<IdentityReport> identity_suite(const GridSpec& g = {});

}  // namespace mhs
