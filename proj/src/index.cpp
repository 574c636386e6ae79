#include "mhs/index.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mhs {

Index::Index(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > 16) throw UsageError("index depth must be in 0..16");
    if (n < 32 && (mask >> n) != 0) throw UsageError("index mask has bits beyond depth");
}

Index::Index(const std::vector<int>& bits) : n_(static_cast<int>(bits.size())) {
    if (n_ > 16) throw UsageError("index depth must be at most 16");
    for (int s = 0; s < n_; ++s) {
        if (bits[s] != 0 && bits[s] != 1) throw UsageError("index components must be 0 or 1");
        if (bits[s]) mask_ |= 1u << s;
    }
}

Index Index::parse(const std::string& s) {
    std::vector<int> bits;
    for (char c : s) {
        if (c != '0' && c != '1') throw UsageError("index string must contain only 0 and 1: " + s);
        bits.push_back(c - '0');
    }
    return Index(bits);
}

Index Index::ones(int n) { return Index(n, n == 0 ? 0u : (0xffffffffu >> (32 - n))); }

Index Index::unit(int n, int s) {
    if (s < 1 || s > n) throw UsageError("unit index slot out of range");
    return Index(n, 1u << (s - 1));
}

int Index::weight() const { return std::popcount(mask_); }

std::vector<int> Index::slots() const {
    std::vector<int> out;
    for (int s = 1; s <= n_; ++s)
        if ((*this)[s]) out.push_back(s);
    return out;
}

std::string Index::str() const {
    std::string s;
    for (int k = 1; k <= n_; ++k) s.push_back((*this)[k] ? '1' : '0');
    return s;
}

static void same_depth(const Index& a, const Index& b) {
    if (a.n() != b.n()) throw UsageError("indices of different depth");
}

bool precedes(const Index& j, const Index& i) {
    same_depth(j, i);
    return (j.mask() & ~i.mask()) == 0;
}

bool less_than(const Index& i, const Index& j) {
    same_depth(i, j);
    if (i.weight() != j.weight()) return i.weight() < j.weight();
    for (int s = 1; s <= i.n(); ++s)
        if (i[s] != j[s]) return i[s] < j[s];
    return false;
}

int pos(const Index& i, const Index& i_plus) {
    same_depth(i, i_plus);
    std::uint32_t diff = i_plus.mask() & ~i.mask();
    if ((i.mask() & ~i_plus.mask()) != 0 || std::popcount(diff) != 1)
        throw UsageError("pos: indices must differ by a single 0->1 increment");
    return std::countr_zero(diff) + 1;
}

std::vector<Index> all_indices(int n) {
    std::vector<Index> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m) out.emplace_back(n, m);
    std::sort(out.begin(), out.end(), less_than);
    return out;
}

int layout_position(const Index& i) {
    auto all = all_indices(i.n());
    return static_cast<int>(std::find(all.begin(), all.end(), i) - all.begin());
}

Point subpoint(const Index& i, const Point& x) {
    if (static_cast<int>(x.size()) != i.n()) throw UsageError("subpoint: point has wrong dimension");
    auto tau = i.slots();
    tau.push_back(i.n() + 1);
    Point y;
    for (std::size_t m = 0; m + 1 < tau.size(); ++m) {
        cplx p = 1.0;
        for (int a = tau[m]; a < tau[m + 1]; ++a) p *= x[a - 1];
        y.push_back(p);
    }
    return y;
}

Index retraction(const Index& i, const Index& j) {
    if (!precedes(j, i)) throw UsageError("retraction requires j to precede i");
    auto tau = i.slots();
    std::vector<int> bits;
    for (int t : tau) bits.push_back(j[t]);
    return Index(bits);
}

std::vector<cplx> a_coords(const Point& x) {
    const int n = static_cast<int>(x.size());
    std::vector<cplx> a(n + 2);
    a[0] = 0.0;
    a[n + 1] = 1.0;
    cplx p = 1.0;
    for (int s = n; s >= 1; --s) {
        p *= x[s - 1];
        if (p == 0.0) throw DomainError("a-coordinates: vanishing partial product at slot " + std::to_string(s));
        a[s] = 1.0 / p;
    }
    return a;
}

std::vector<std::vector<int>> maximal_chains(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<int> position_functions(const std::vector<int>& added) {
    std::vector<int> f;
    std::vector<int> have;
    for (int s : added) {
        have.push_back(s);
        std::sort(have.begin(), have.end());
        f.push_back(static_cast<int>(std::find(have.begin(), have.end(), s) - have.begin()) + 1);
    }
    if (!f.empty()) f[0] = 1;
    return f;
}

}  // namespace mhs
