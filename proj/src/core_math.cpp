#include "ccx/core_math.hpp"

#include <algorithm>
#include <sstream>

namespace ccx {

BigInt binomial(long a, long b) {
    if (a < 0) throw std::invalid_argument("binomial: a must be nonnegative");
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    BigInt r = 1;
    for (long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(BigInt v) {
    Polynomial p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

Polynomial Polynomial::monomial(int deg, BigInt coeff) {
    Polynomial p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, 0);
        p.c_[deg] = std::move(coeff);
    }
    return p;
}

Polynomial Polynomial::from_roots(const std::vector<BigInt>& roots) {
    Polynomial p = Polynomial::constant(1);
    for (const BigInt& r : roots) p = p * Polynomial(IntSeq{-r, 1});
    return p;
}

BigInt Polynomial::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    IntSeq r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    IntSeq r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    IntSeq r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::divide_by_linear(const BigInt& root) const {
    if (c_.empty()) return {};
    IntSeq q(c_.size() - 1, 0);
    BigInt carry = 0;
    for (int k = degree(); k >= 1; --k) {
        carry = carry * root + c_[k];
        q[k - 1] = carry;
    }
    if (carry * root + c_[0] != 0)
        throw NonIntegralResult("divide_by_linear: nonzero remainder");
    return Polynomial(std::move(q));
}

Polynomial Polynomial::divide_by_t() const {
    if (c_.empty()) return {};
    if (c_[0] != 0) throw NonIntegralResult("divide_by_t: nonzero constant term");
    return Polynomial(IntSeq(c_.begin() + 1, c_.end()));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& a = c_[k];
        if (a == 0) continue;
        BigInt mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.str();
        if (k >= 1) {
            os << var;
            if (k >= 2) os << "^" << k;
        }
    }
    return os.str();
}

IntSeq alternating_binomial_transform(const IntSeq& c, int n, int out_len) {
    if (n < 1 || out_len < 1)
        throw std::invalid_argument("alternating_binomial_transform: bad n/out_len");
    if (static_cast<int>(c.size()) < out_len + kGuardWindow)
        throw std::invalid_argument(
            "alternating_binomial_transform: input shorter than out_len + guard");
    auto coeff_at = [&](int k) {
        BigInt h = 0;
        for (int i = 0; i <= std::min(k, n); ++i) {
            BigInt term = binomial(n, i) * c[k - i];
            if (i % 2) h -= term; else h += term;
        }
        return h;
    };
    for (int k = out_len; k < out_len + kGuardWindow; ++k) {
        if (coeff_at(k) != 0)
            throw GuardViolation("nonzero coefficient at guard index " +
                                 std::to_string(k));
    }
    IntSeq h(out_len);
    for (int k = 0; k < out_len; ++k) h[k] = coeff_at(k);
    return h;
}

Polynomial interpolate(const std::vector<std::pair<BigInt, BigInt>>& points) {
    const size_t m = points.size();
    if (m == 0) throw std::invalid_argument("interpolate: no points");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate x-value");
    // Newton's divided differences over the rationals.
    std::vector<Rational> coef(m);
    for (size_t i = 0; i < m; ++i) coef[i] = Rational(points[i].second);
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m - 1; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) /
                      Rational(points[i].first - points[i - level].first);
    // Expand the Newton form.
    std::vector<Rational> poly{coef[m - 1]};
    for (size_t i = m - 1; i-- > 0;) {
        // poly = poly * (t - x_i) + coef[i]
        poly.insert(poly.begin(), Rational(0));
        Rational xi(points[i].first);
        for (size_t k = 0; k + 1 < poly.size(); ++k) poly[k] -= xi * poly[k + 1];
        poly[0] += coef[i];
    }
    IntSeq out(poly.size());
    for (size_t k = 0; k < poly.size(); ++k) {
        if (denominator(poly[k]) != 1)
            throw NonIntegralResult("interpolate: non-integral coefficient of t^" +
                                    std::to_string(k));
        out[k] = numerator(poly[k]);
    }
    return Polynomial(std::move(out));
}

std::string bigint_to_string(const BigInt& v) { return v.str(); }

std::string seq_to_string(const IntSeq& s) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i].str();
    }
    os << ")";
    return os.str();
}

}  // namespace ccx
