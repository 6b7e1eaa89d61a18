#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccx/core_math.hpp"
#include "ccx/graph.hpp"

namespace ccx {

struct CrossCheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A subarrangement of the type-B arrangement B_n: hyperplanes x_i = x_j
/// (Eq), x_i = -x_j (Ne) and x_i = 0 (Zero), normalized with i < j.
struct Hyperplane {
    enum class Kind { Eq, Ne, Zero };
    Kind kind;
    int i = 0;
    int j = 0;  // unused for Zero
    auto operator<=>(const Hyperplane&) const = default;
};

class SignedArrangement {
  public:
    SignedArrangement(int n, std::vector<Hyperplane> hyperplanes);

    int n() const { return n_; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyps_; }
    bool empty() const { return hyps_.empty(); }

    /// Text format: first line "n m", then m lines "eq i j" | "ne i j" |
    /// "zero i"; blank lines and '#' comments ignored.
    static SignedArrangement parse(std::istream& in);
    std::string format() const;

    bool operator==(const SignedArrangement& o) const = default;

  private:
    int n_;
    std::vector<Hyperplane> hyps_;
};

/// The full B_n arrangement: 2*C(n,2) + n hyperplanes.
SignedArrangement full_bn(int n);

/// x_i = x_j for each edge of G.
SignedArrangement graphic(const Graph& g);

/// Matroid rank = rank over Q of the normal vectors.
int rank(const SignedArrangement& a);

/// Characteristic polynomial via finite-field point counting over the
/// first rank+1 odd primes, interpolation, and a cross-check at one more
/// prime.  Returns (chi, rank); chi is monic of degree rank.
std::pair<Polynomial, int> char_poly(const SignedArrangement& a);

/// All nonempty subarrangements of B_n for n <= 3; seeded samples of 200
/// for n = 4.
std::vector<SignedArrangement> enumerate_subarrangements(int n,
                                                         std::uint64_t seed = 0);

}  // namespace ccx
