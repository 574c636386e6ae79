#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "mhs/variation.hpp"

namespace mhs {

using IMatrix = Eigen::MatrixXi;

// second == 0: the axis x_first = 0; otherwise the component 1 - x_first...x_second = 0
struct LoopLabel {
    int first = 1;
    int second = 0;
    bool axis() const { return second == 0; }
    std::string str() const;
    static LoopLabel parse(const std::string& s);
};

std::vector<LoopLabel> all_loops(int n);

// integer generator, continuation convention 𝓜 -> 𝓜 M
IMatrix generator(int n, const LoopLabel& q);

bool is_unipotent(const IMatrix& M, int order);

// Basepoints where the standard loops reproduce the generators exactly: every
// triple of a_1, ..., a_n, a_{n+1} = 1 (in order) turns clockwise, and so does
// 0, a_1, a_k.  Elsewhere transport gives conjugates of the generators.
bool standard_chamber(const Point& x);

// piecewise smooth loop s in [0,1] -> ℂⁿ
struct LoopPath {
    std::function<Point(double)> x;
    std::function<Point(double)> dx;
    std::vector<double> breaks;  // includes 0 and 1
};

// Meridian for the label, based at x0.  Axis loops rotate x_j about 0.  Component
// loops move the a-coordinate a_first straight toward a_{second+1}, circle it
// counterclockwise at radius `radius` times their distance, and return.
LoopPath standard_loop(const Point& x0, const LoopLabel& q, double radius = 0.05);
// closed polyline through the vertices (first == last)
LoopPath polyline_loop(const std::vector<Point>& vertices);
// coordinate `coord` (1-based) runs counterclockwise once around center[coord], radius r;
// based at center with that coordinate shifted by +r
LoopPath circle_loop(const Point& center, int coord, double r);
// x_coord runs radially out to |x| = R, once clockwise around the origin (once
// around x = ∞ counterclockwise) and back
LoopPath infinity_loop(const Point& x0, int coord, double R, int segments = 256);
// loop traversed in the opposite direction
LoopPath reversed(const LoopPath& p);
// p then q (both based at the same point)
LoopPath concatenate(const LoopPath& p, const LoopPath& q);

// Φ with Λ(end) = Φ Λ(start) for dΛ = ΩΛ along the path
CMatrix transport_fundamental(const Connection& omega, const LoopPath& path, double tol = 1e-11);

struct TransportResult {
    IMatrix M;
    CMatrix raw;        // 𝓜⁻¹ Φ 𝓜
    double deviation;   // max distance of raw entries from integers
};

// M with (continued 𝓜) = 𝓜 M; `period` is the matrix at the basepoint.
TransportResult monodromy_from_transport(const Connection& omega, const CMatrix& period, const LoopPath& path,
                                         double tol = 1e-11);
TransportResult transport(int n, const Point& x0, const LoopLabel& q, const EvalSettings& s = {});

// N = log T / (2πi), returned as the rational matrix log T (the 1/(2πi) is implicit)
Eigen::MatrixXd log_unipotent(const IMatrix& T);
IMatrix exp_nilpotent_int(const Eigen::MatrixXd& N);  // exp of log T, rounded; inverse of the above

}  // namespace mhs
