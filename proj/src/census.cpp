#include "mhs/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace mhs {

std::string Tableau::str() const {
    std::string s = "|";
    for (int v : b) s += v == 0 ? " 0 |" : v < 0 ? " 1 |" : " a" + std::to_string(v) + " |";
    return s;
}

Tableau make_tableau(const MultiIndex& m) {
    check_multi_index(m);
    Tableau t;
    t.m = m;
    t.b.push_back(0);
    for (size_t i = 0; i < m.size(); ++i) {
        t.b.push_back(static_cast<int>(i) + 1);
        t.b.insert(t.b.end(), m[i] - 1, 0);
    }
    t.b.push_back(-1);
    return t;
}

CensusResult enumerate_census(const MultiIndex& m) {
    const Tableau t = make_tableau(m);
    const int K = t.K();
    if (K > kMaxCensusWeight) throw UsageError("census enumeration limited to weight " + std::to_string(kMaxCensusWeight));
    CensusResult r;
    r.m = m;
    r.method = CensusMethod::enumerated;
    r.c.assign(K + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << K); ++mask) {
        int prev = 0;
        bool ok = true;
        for (int slot = 1; slot <= K + 1 && ok; ++slot) {
            if (slot <= K && !(mask >> (slot - 1) & 1u)) continue;
            ok = slot == prev + 1 || t.nonzero(prev) || t.nonzero(slot);
            prev = slot;
        }
        if (ok) ++r.c[std::popcount(mask)];
    }
    return r;
}

long long d_lower(const MultiIndex& m, int k) {
    check_multi_index(m);
    int K = 0;
    for (int v : m) K += v;
    if (k < 0 || k > K) return 0;
    return d_vector(m)[k];
}

std::vector<long long> d_vector(const MultiIndex& m) {
    check_multi_index(m);
    std::vector<long long> d{1};
    for (int mi : m) {
        std::vector<long long> next(d.size() + mi, 0);
        for (size_t j = 0; j < d.size(); ++j)
            for (int k = 0; k <= mi; ++k) next[j + k] += d[j];
        d = std::move(next);
    }
    return d;
}

long long d_double(int r, int s, int k) {
    if (r < 1 || s < 1) throw UsageError("d_double needs r, s >= 1");
    const int lo = std::min(r, s), hi = std::max(r, s);
    if (k < 0 || k > r + s) return 0;
    if (k <= lo) return k + 1;
    if (k <= hi) return lo + 1;
    return r + s + 1 - k;
}

CensusResult closed_form_double(int r, int s, bool literal) {
    if (r < 1 || s < 1) throw UsageError("closed_form_double needs r, s >= 1");
    CensusResult out;
    out.m = {r, s};
    out.method = CensusMethod::closed_form;
    for (int k = 0; k <= r + s; ++k) {
        const bool bump = k == s && (literal ? r != s : r < s);
        out.c.push_back(d_double(r, s, k) + (bump ? 1 : 0));
    }
    return out;
}

std::vector<long long> tau_census(const std::vector<int>& tau) {
    const int w = tau.empty() ? -1 : *std::max_element(tau.begin(), tau.end());
    std::vector<long long> c(w + 1, 0);
    for (int t : tau) ++c[t];
    return c;
}

}  // namespace mhs
