#pragma once

#include <string>
#include <vector>

#include "mhs/polylog.hpp"

namespace mhs {

// slot symbols of the tableau | 0 | a_1 | 0 x (m_1 - 1) | ... | a_n | 0 x (m_n - 1) | 1 |
struct Tableau {
    MultiIndex m;
    std::vector<int> b;  // 0 for a zero, i for a_i, -1 for the final 1
    int K() const { return static_cast<int>(b.size()) - 2; }
    bool nonzero(int slot) const { return b[slot] != 0; }
    std::string str() const;
};

Tableau make_tableau(const MultiIndex& m);

enum class CensusMethod { enumerated, closed_form };

struct CensusResult {
    MultiIndex m;
    std::vector<long long> c;  // c_0 ... c_K
    CensusMethod method = CensusMethod::enumerated;
};

constexpr int kMaxCensusWeight = 24;

// brute force over subsets of the interior slots, condition (iii) read as written
CensusResult enumerate_census(const MultiIndex& m);

// number of (k_1, ..., k_n) with Σ k_i = k and 0 <= k_i <= m_i
long long d_lower(const MultiIndex& m, int k);
std::vector<long long> d_vector(const MultiIndex& m);
// the piecewise form for depth two
long long d_double(int r, int s, int k);

// closed form for Li_{r,s}: d_k + 1 at k = s when r < s, d_k otherwise.  With
// literal = true the exception is r != k = s.
CensusResult closed_form_double(int r, int s, bool literal = false);

// multiset of τ exponents per weight for a matrix system
std::vector<long long> tau_census(const std::vector<int>& tau);

}  // namespace mhs
