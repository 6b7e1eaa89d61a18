#include "ccx/hseries.hpp"

namespace ccx {

std::string to_string(HKind k) {
    switch (k) {
        case HKind::Color: return "color";
        case HKind::Unipolar: return "unipolar";
        case HKind::Bn: return "bn";
        case HKind::Matroid: return "matroid";
        case HKind::Direct: return "direct";
    }
    return "?";
}

namespace {

void require_chromatic(const Polynomial& p, int n) {
    if (p.degree() != n || p.coeff(n) != 1 || p.coeff(0) != 0)
        throw BadChromatic(
            "expected a monic degree-n polynomial with zero constant term");
}

BigInt ipow(const BigInt& base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

HVectorReport extract_color_h(const Polynomial& p, int n) {
    require_chromatic(p, n);
    const int out_len = n + 1;
    IntSeq c(out_len + kGuardWindow);
    for (int j = 0; j < static_cast<int>(c.size()); ++j)
        c[j] = ipow(j + 1, n) - p.eval(j + 1);
    return {alternating_binomial_transform(c, n, out_len), HKind::Color, n, n};
}

HVectorReport extract_unipolar_h(const Polynomial& p, int n) {
    require_chromatic(p, n);
    const int out_len = n - 1;
    IntSeq c(out_len + kGuardWindow);
    for (int j = 0; j < static_cast<int>(c.size()); ++j) {
        BigInt v = ipow(j + 1, n) - p.eval(j + 1);
        if (v % (j + 1) != 0)
            throw DivisibilityViolation("series term not divisible by j+1");
        c[j] = v / (j + 1);
    }
    return {alternating_binomial_transform(c, n - 1, out_len), HKind::Unipolar, n,
            n - 2};
}

HVectorReport extract_bn_h(const Polynomial& chi, int r, int n) {
    if (chi.degree() != r || (r > 0 && chi.coeff(r) != 1) ||
        (r == 0 && !(chi == Polynomial::constant(1))))
        throw RankMismatch("extract_bn_h: chi must be monic of degree r");
    if (r > n) throw RankMismatch("extract_bn_h: r > n");
    const int out_len = n;
    IntSeq c(out_len + kGuardWindow);
    for (int j = 0; j < static_cast<int>(c.size()); ++j) {
        BigInt q = 2 * j + 1;
        c[j] = ipow(q, n) - chi.eval(q) * ipow(q, n - r);
    }
    return {alternating_binomial_transform(c, n, out_len), HKind::Bn, n, n - 1};
}

HVectorReport extract_matroid_h(const Polynomial& chi, int n) {
    if (chi.degree() != n - 1 || chi.coeff(n - 1) != 1)
        throw RankMismatch("extract_matroid_h: chi must be monic of degree n-1");
    const int out_len = n + 1;
    IntSeq c(out_len + kGuardWindow);
    for (int j = 0; j < static_cast<int>(c.size()); ++j) {
        BigInt q = j + 1;
        c[j] = ipow(q, n) - q * chi.eval(q);
    }
    return {alternating_binomial_transform(c, n, out_len), HKind::Matroid, n, n};
}

}  // namespace ccx
