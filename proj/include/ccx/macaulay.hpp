#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccx/core_math.hpp"

namespace ccx {

/// The unique decomposition h = C(a_i,i) + C(a_{i-1},i-1) + ... + C(a_j,j)
/// with a_i > a_{i-1} > ... > a_j >= j >= 1.
struct MacaulayRep {
    int i = 0;
    /// (a, index) pairs in decreasing index order, starting at index i.
    std::vector<std::pair<long, int>> parts;
    BigInt value() const;
};

MacaulayRep macaulay_rep(const BigInt& h, int i);

/// h^{<i>}; by convention 0^{<i>} = 0.
BigInt macaulay_bound(const BigInt& h, int i);

struct MVectorVerdict {
    bool ok = true;
    std::optional<int> witness;  // first violated index
};

/// True iff the sequence is an M-vector: nonnegative, leading 1 (empty is
/// vacuously true), and seq[i+1] <= seq[i]^{<i>} throughout.
MVectorVerdict is_m_vector(const IntSeq& seq);

struct CedReport {
    bool monotone_ok = true;       // h_0 <= h_1 <= ... <= h_{floor(d/2)}
    bool symmetric_ineq_ok = true; // h_i <= h_{d-i} for i <= d/2
    bool g_is_m_vector = true;
    IntSeq g;
    std::optional<std::string> first_failure;
    bool all_ok() const { return monotone_ok && symmetric_ineq_ok && g_is_m_vector; }
};

/// The three convex-ear-decomposition conditions on an h-vector of
/// dimension parameter d = h.size()-1.
CedReport ced_conditions(const IntSeq& h);

}  // namespace ccx
