#include "ccx/macaulay.hpp"

#include <sstream>

namespace ccx {

BigInt MacaulayRep::value() const {
    BigInt v = 0;
    for (auto [a, k] : parts) v += binomial(a, k);
    return v;
}

MacaulayRep macaulay_rep(const BigInt& h, int i) {
    if (h < 1 || i < 1)
        throw std::invalid_argument("macaulay_rep: need h >= 1 and i >= 1");
    MacaulayRep rep;
    rep.i = i;
    BigInt rest = h;
    int k = i;
    while (rest > 0 && k >= 1) {
        // largest a with C(a,k) <= rest
        long a = k;
        while (binomial(a + 1, k) <= rest) ++a;
        rep.parts.emplace_back(a, k);
        rest -= binomial(a, k);
        --k;
    }
    // The greedy choice is automatically strictly decreasing in a; the
    // round-trip check guards against any arithmetic slip.
    if (rest != 0 || rep.value() != h)
        throw std::logic_error("macaulay_rep: decomposition failed");
    for (size_t t = 1; t < rep.parts.size(); ++t)
        if (rep.parts[t - 1].first <= rep.parts[t].first)
            throw std::logic_error("macaulay_rep: parts not strictly decreasing");
    return rep;
}

BigInt macaulay_bound(const BigInt& h, int i) {
    if (h < 0) throw std::invalid_argument("macaulay_bound: h must be >= 0");
    if (i < 1) throw std::invalid_argument("macaulay_bound: i must be >= 1");
    if (h == 0) return 0;
    BigInt b = 0;
    for (auto [a, k] : macaulay_rep(h, i).parts) b += binomial(a + 1, k + 1);
    return b;
}

MVectorVerdict is_m_vector(const IntSeq& seq) {
    if (seq.empty()) return {};
    if (seq[0] != 1) return {false, 0};
    for (size_t k = 0; k < seq.size(); ++k)
        if (seq[k] < 0) return {false, static_cast<int>(k)};
    for (size_t k = 1; k + 1 < seq.size(); ++k)
        if (seq[k + 1] > macaulay_bound(seq[k], static_cast<int>(k)))
            return {false, static_cast<int>(k)};
    return {};
}

CedReport ced_conditions(const IntSeq& h) {
    if (h.empty())
        throw std::invalid_argument("ced_conditions: h must be nonempty");
    const int d = static_cast<int>(h.size()) - 1;
    CedReport rep;
    std::ostringstream why;
    for (int i = 0; i + 1 <= d / 2; ++i)
        if (h[i] > h[i + 1]) {
            rep.monotone_ok = false;
            why << "h_" << i << " > h_" << (i + 1);
            break;
        }
    for (int i = 0; 2 * i <= d; ++i)
        if (h[i] > h[d - i]) {
            rep.symmetric_ineq_ok = false;
            if (why.tellp() > 0) why << "; ";
            why << "h_" << i << " > h_" << (d - i);
            break;
        }
    const int half = (d + 1) / 2;  // ceil(d/2)
    rep.g.push_back(h[0]);
    for (int k = 1; k <= half; ++k) rep.g.push_back(h[k] - h[k - 1]);
    auto verdict = is_m_vector(rep.g);
    rep.g_is_m_vector = verdict.ok;
    if (!verdict.ok) {
        if (why.tellp() > 0) why << "; ";
        why << "g is not an M-vector (index " << *verdict.witness << ")";
    }
    if (why.tellp() > 0) rep.first_failure = why.str();
    return rep;
}

}  // namespace ccx
