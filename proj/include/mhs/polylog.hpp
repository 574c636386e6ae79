#pragma once

#include <vector>

#include "mhs/dlog.hpp"
#include "mhs/index.hpp"
#include "mhs/types.hpp"

namespace mhs {

using MultiIndex = std::vector<int>;

void check_multi_index(const MultiIndex& m);

double zeta(int s);             // integer s != 1, including s <= 0
double bernoulli(int k);        // B_1 = -1/2
cplx bernoulli_poly(int m, cplx t);

// Principal branch; real z > 1 (z >= 1 for m = 1) lies on the cut and needs a side.
cplx classical_li(int m, cplx z, BranchSide side = BranchSide::none);

// Nested sum over 0 < k_1 < ... < k_n.  Points on the unit polycircle with
// m_n >= 2 are evaluated through the iterated-integral representation.
cplx li_series(const MultiIndex& m, const Point& x, const EvalSettings& s = {});

// (-1)^n I(0; a_1, 0^{m_1-1}, ..., a_n, 0^{m_n-1}; 1) along the straight path [0,1].
cplx li_iterated(const MultiIndex& m, const Point& x, const EvalSettings& s = {});

// letters of the representation above (a_1, 0, ..., a_n, 0, ...)
std::vector<cplx> li_letters(const MultiIndex& m, const Point& x);

double mzv(const MultiIndex& m, const EvalSettings& s = {});

// 𝔏_k(y) = Li_{1,...,1}(y) on the straight-path branch; 𝔏_0 = 1
cplx frak_l(const Point& y, const EvalSettings& s = {});

// H(x,y) = 𝔏_1(y) - 𝔏_1(x) - log x, principal logs
cplx h_aux(cplx x, cplx y);

// Forms w_1, ..., w_k of the chain formula, pulled back to x through the
// subpoint x(i); w(t, i) is w_t(x(i)) as a dlog sum in x.
DlogSum w_form(int t, const Index& i);

// 𝔏_n(x) by the chain formula along a polyline in ℂⁿ from the origin to x.
// An empty path means the straight segment 0 -> x.
cplx multilog(const Point& x, const std::vector<Point>& path = {}, const EvalSettings& s = {});

// the six (n=3: n!) chain terms of the chain formula, same ordering as maximal_chains(n)
std::vector<cplx> multilog_terms(const Point& x, const std::vector<Point>& path = {},
                                 const EvalSettings& s = {});

}  // namespace mhs
