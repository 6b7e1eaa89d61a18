#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient sequence with explicit length; no implicit truncation.
using IntSeq = std::vector<BigInt>;

struct GuardViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegralResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// C(a,b) exactly; 0 when b < 0 or b > a.
BigInt binomial(long a, long b);

/// Dense univariate polynomial over Z. coeffs[k] is the coefficient of t^k.
/// The zero polynomial is the empty vector; otherwise the top coefficient
/// is nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(IntSeq coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(BigInt v);
    static Polynomial monomial(int deg, BigInt coeff = 1);
    /// Monic product of (t - r) over the given roots; [] -> 1.
    static Polynomial from_roots(const std::vector<BigInt>& roots);

    /// -1 stands in for the zero polynomial's degree.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const IntSeq& coeffs() const { return c_; }
    BigInt coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : BigInt(0);
    }

    BigInt eval(const BigInt& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const = default;

    /// Exact division by (t - root); throws NonIntegralResult on a nonzero
    /// remainder.
    Polynomial divide_by_linear(const BigInt& root) const;
    /// Exact division by t (requires zero constant term).
    Polynomial divide_by_t() const;

    /// Signed monomial list, highest degree first, e.g. "t^3 - 3t^2 + 2t".
    std::string to_string(const std::string& var = "t") const;

  private:
    void normalize();
    IntSeq c_;
};

/// Coefficients h_0..h_{out_len-1} of (1-t)^n * sum c_j t^j, with a
/// three-entry guard window checked to vanish past out_len.
IntSeq alternating_binomial_transform(const IntSeq& c, int n, int out_len);

inline constexpr int kGuardWindow = 3;

/// Unique interpolating polynomial of degree < points.size() through the
/// given (x, y) pairs; x-values must be pairwise distinct.  Throws
/// NonIntegralResult when the coefficients are not integers.
Polynomial interpolate(const std::vector<std::pair<BigInt, BigInt>>& points);

std::string bigint_to_string(const BigInt& v);
std::string seq_to_string(const IntSeq& s);

}  // namespace ccx
