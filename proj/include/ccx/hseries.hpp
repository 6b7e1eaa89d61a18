#pragma once

#include <string>

#include "ccx/core_math.hpp"

namespace ccx {

struct BadChromatic : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisibilityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class HKind { Color, Unipolar, Bn, Matroid, Direct };

std::string to_string(HKind k);

/// An h-vector with its provenance.  values has length d+1.
struct HVectorReport {
    IntSeq values;
    HKind kind = HKind::Direct;
    int n = 0;
    int d = 0;
};

/// h-vector of the double cone of the coloring complex, from P_G.
/// d = n; the top two entries are structurally zero.
HVectorReport extract_color_h(const Polynomial& p, int n);

/// h-vector of a unipolar complex, from P_G.  d = n-2.
HVectorReport extract_unipolar_h(const Polynomial& p, int n);

/// h-vector of the B_n sphere restricted to an arrangement with
/// characteristic polynomial chi and rank r.  d = n-1.
HVectorReport extract_bn_h(const Polynomial& chi, int r, int n);

/// Matroid analog for a rank n-1 matroid with characteristic polynomial
/// chi.  d = n.
HVectorReport extract_matroid_h(const Polynomial& chi, int n);

}  // namespace ccx
