#pragma once

#include <string>
#include <vector>

#include "mhs/monodromy.hpp"
#include "mhs/variation.hpp"

namespace mhs {

enum class SmallKind { classical, li21, li12 };

struct SmallVariation {
    SmallKind kind = SmallKind::li21;
    int n = 0;              // classical only
    CMatrix M;              // τ-scaled
    std::vector<int> tau;
    Point x;
};

// "2,1", "1,2" or "classical"
SmallKind parse_small_kind(const std::string& s);
std::string kind_name(SmallKind k);

// first column (1, Li_1(x), ..., Li_n(x)), band k below the diagonal log^k x / k!.
// Li_m on the principal branch, log x on the straight path from 1; real x > 1
// (resp. x < 0) takes the side in s.
SmallVariation classical_matrix(int n, cplx x, const EvalSettings& s = {});

// Li_{2,1} and Li_{1,2} systems from the letters (a_1, 0, a_2) and (a_1, a_2, 0),
// a_1 = 1/(xy), a_2 = 1/y, integrated along straight segments
SmallVariation build_21(cplx x, cplx y, const EvalSettings& s = {});
SmallVariation build_12(cplx x, cplx y, const EvalSettings& s = {});
WordSystem system_21(cplx x, cplx y);
WordSystem system_12(cplx x, cplx y);

// the displayed closed forms with principal branches; they agree with the
// straight-segment systems near the origin
CMatrix display_21(cplx x, cplx y);
CMatrix display_12(cplx x, cplx y);
cplx f_21(cplx x, cplx y);  // Li2(1/x) - Li2(y) + log(xy) Li1(y)
cplx g_12(cplx x, cplx y);  // Li2(y) - Li2(1/x) - log(xy) Li1(1/x)

// d𝓜 = Ω𝓜 as displayed; classical uses the single coordinate x
Connection small_connection(SmallKind k, int n = 0);

double verify_weight3_flatness(SmallKind k, const Point& x, double h, const EvalSettings& s = {});

struct LabeledGenerator {
    LoopLabel loop;
    IMatrix M;
};

// the five generators q10, q20, q11, q22, q12.  raw: as listed, with the loops
// around 1 - x_i...x_j oriented so that ∫dlog(1 - x_i...x_j) = -2πi.  Otherwise
// those three are inverted to the global orientation (+2πi).
std::vector<LabeledGenerator> weight3_generators(SmallKind k, bool raw = false);

// M with (continued 𝓜) = 𝓜 M for the standard loop of the label
TransportResult weight3_transport(SmallKind k, const Point& x0, const LoopLabel& q, const EvalSettings& s = {});

}  // namespace mhs
