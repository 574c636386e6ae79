#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "mhs/dlog.hpp"
#include "mhs/index.hpp"
#include "mhs/types.hpp"

namespace mhs {

using CMatrix = Eigen::MatrixXcd;

// Rows and columns are selections (ascending letter positions, 1-based) from a
// letter sequence b_1..b_K.  Entry (w, v) with v ⊆ w is
//   (-1)^{#nonzero letters of w \ v} Π_r I(v_r; letters of w strictly between; v_{r+1})
// with v_0 = 0 and a final endpoint 1, integrated along straight segments; the
// column v is scaled by (2πi)^{|v|}.
struct WordSystem {
    std::vector<cplx> letters;
    std::vector<std::vector<int>> rows;
};

CMatrix word_matrix(const WordSystem& w, const EvalSettings& s = {});
cplx word_entry(const WordSystem& w, int row, int col, const EvalSettings& s = {});

struct VariationMatrix {
    int n = 0;
    CMatrix M;
    std::vector<int> tau;  // |i| per row/column
    Point x;
};

WordSystem multilog_system(int n, const Point& x);

// E_{i,j} before scaling, iterated-integral form
cplx entry(const Index& i, const Index& j, const Point& x, const EvalSettings& s = {});
// E_{i,j} as a product of 𝔏-values of cross-ratio arguments
cplx entry_product_form(const Index& i, const Index& j, const Point& x, const EvalSettings& s = {});

VariationMatrix build_matrix(int n, const Point& x, const EvalSettings& s = {});

// Divisor check: throws DomainError naming the vanishing factor.
void check_off_divisor(const Point& x);

// Matrix of logarithmic forms with d𝓜 = Ω𝓜.
struct Connection {
    int n = 0;
    std::vector<std::vector<DlogSum>> c;  // [row][col]
    // ∂/∂x_k components, one matrix per k
    std::vector<CMatrix> evaluate(const Point& x) const;
    // residue along a catalog factor: integer coefficient matrix
    Eigen::MatrixXi residue(const Factor& f) const;
};

Connection connection(int n);

// max |∂𝓜/∂x_k - Ω_k 𝓜| over k, entries, real and imaginary directions
double flatness_residual(const std::function<CMatrix(const Point&)>& build, const Connection& omega,
                         const Point& x, double h);
double verify_flatness(int n, const Point& x, double h, const EvalSettings& s = {});

struct IntegrabilityReport {
    double d_omega = 0.0;     // symbolic: 0 when every entry is an integer dlog sum
    double mixed_partials = 0.0;
    double wedge = 0.0;
};
IntegrabilityReport verify_integrability(const Connection& omega, const Point& x);

struct FiltrationSpec {
    int n = 0;
    // k -> column positions spanning W_{-2k}
    std::vector<std::vector<int>> weight_basis;
    // p -> row positions spanning F^{-p}
    std::vector<std::vector<int>> hodge_basis;
};
FiltrationSpec filtration(int n);
std::vector<int> graded_dims(int n);
// positions i with k <= |i| <= p
std::vector<int> hodge_weight_intersection(int n, int p, int k);

// conj-free helpers
CMatrix tau_matrix(const std::vector<int>& tau, cplx lambda);

}  // namespace mhs
