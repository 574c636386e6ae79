#pragma once

#include <string>
#include <vector>

#include "mhs/chen.hpp"
#include "mhs/types.hpp"

namespace mhs {

// Catalog of divisor factors: x_a, or 1 - x_a x_{a+1} ... x_b (1-based slots).
struct Factor {
    enum Kind { X, OneMinus } kind;
    int a, b;
    static Factor x(int a) { return {X, a, a}; }
    static Factor one_minus(int a, int b) { return {OneMinus, a, b}; }
    bool operator==(const Factor& o) const { return kind == o.kind && a == o.a && b == o.b; }
    bool operator<(const Factor& o) const;
    cplx value(const Point& x) const;
    std::string str() const;
};

struct DlogTerm {
    int coef;
    Factor f;
};

// Σ coef * dlog(f), kept merged and sorted
class DlogSum {
public:
    DlogSum() = default;
    DlogSum(int coef, Factor f) { add(coef, f); }
    DlogSum& add(int coef, Factor f);
    DlogSum& operator+=(const DlogSum& o);
    DlogSum operator-() const;
    bool empty() const { return terms_.empty(); }
    const std::vector<DlogTerm>& terms() const { return terms_; }
    // ∂/∂x_1 ... ∂/∂x_n at x
    std::vector<cplx> gradient(const Point& x) const;
    // value along a direction: Σ_k v_k ∂_k
    cplx directional(const Point& x, const Point& v) const;
    // pull back along s -> p + s v
    LogForm pullback(const Point& p, const Point& v) const;
    std::string str() const;

private:
    std::vector<DlogTerm> terms_;
};

inline DlogSum operator+(DlogSum a, const DlogSum& b) { return a += b; }
inline DlogSum operator-(DlogSum a, const DlogSum& b) { return a += -b; }

// roots of Σ c_k s^k (c_0 first), leading zeros stripped
std::vector<cplx> poly_roots(std::vector<cplx> coeffs);

}  // namespace mhs
