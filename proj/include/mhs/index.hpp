#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mhs/types.hpp"

namespace mhs {

// A 0/1 vector of length n.  Slot s (1-based) lives in bit s-1.
class Index {
public:
    Index() = default;
    Index(int n, std::uint32_t mask);
    explicit Index(const std::vector<int>& bits);
    static Index parse(const std::string& s);
    static Index zeros(int n) { return Index(n, 0u); }
    static Index ones(int n);
    static Index unit(int n, int s);

    int n() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    int operator[](int s) const { return (mask_ >> (s - 1)) & 1u; }
    int weight() const;
    std::vector<int> slots() const;  // 1-slots, ascending
    std::string str() const;

    bool operator==(const Index& o) const { return n_ == o.n_ && mask_ == o.mask_; }
    bool operator!=(const Index& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::uint32_t mask_ = 0;
};

inline int weight(const Index& i) { return i.weight(); }

// j ≺ i, componentwise
bool precedes(const Index& j, const Index& i);
// complete order: weight, then lexicographic from slot 1 with 0 < 1
bool less_than(const Index& i, const Index& j);
// s with i_plus = i + u_s
int pos(const Index& i, const Index& i_plus);

// all of 𝔖ₙ ascending in the complete order; this is the matrix layout
std::vector<Index> all_indices(int n);
// position of i in all_indices(i.n())
int layout_position(const Index& i);

Point subpoint(const Index& i, const Point& x);
Index retraction(const Index& i, const Index& j);

// a_0 = 0, a_s = 1/(x_s...x_n), a_{n+1} = 1
std::vector<cplx> a_coords(const Point& x);

// increasing chains j_1 ≺ ... ≺ j_n with |j_t| = t, as the slot added at each step
std::vector<std::vector<int>> maximal_chains(int n);
// f^t of a chain given by its added slots; f^1 = 1 and f^t is the rank of the
// new slot among the 1-slots of j_t
std::vector<int> position_functions(const std::vector<int>& added_slots);

}  // namespace mhs
