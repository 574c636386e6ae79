#pragma once

#include <utility>
#include <vector>

#include "mhs/types.hpp"

namespace mhs {

// Σ c_b du/(u - b) on a complex line.
struct LogForm {
    std::vector<std::pair<cplx, cplx>> terms;  // (coefficient, pole)
    static LogForm letter(cplx a) { return LogForm{{{1.0, a}}}; }
};

// Advance the Chen iterated integrals I_0 = 1, I_1, ..., I_K of the forms along
// the straight segment u0 -> u1 (t_1 innermost).  I must have forms.size()+1
// entries.  Poles lying exactly on the segment are bypassed by a small box on the
// side chosen by s.side (above = left of the direction of travel).
// at_start: u0 is the start of the whole path, so a pole of form k at u0 is
// allowed while I_{k-1} vanishes there.
// at_end: u1 ends the whole path, so poles at u1 are approached geometrically;
// only I_K is meaningful afterwards and the last form must be regular at u1.
void chen_advance(std::vector<cplx>& I, const std::vector<LogForm>& forms, cplx u0, cplx u1,
                  const EvalSettings& s, bool at_start, bool at_end);

// ∫_path dt/(t-a_1) ... dt/(t-a_k) along a polyline; empty letters give 1.
cplx iterated_integral(const std::vector<cplx>& letters, const std::vector<cplx>& path,
                       const EvalSettings& s = {});

// I(a; letters; b) along the straight segment a -> b.
inline cplx iterated_integral(cplx a, const std::vector<cplx>& letters, cplx b,
                              const EvalSettings& s = {}) {
    return iterated_integral(letters, {a, b}, s);
}

}  // namespace mhs
