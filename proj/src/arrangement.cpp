#include "ccx/arrangement.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <set>
#include <sstream>

namespace ccx {

SignedArrangement::SignedArrangement(int n, std::vector<Hyperplane> hyperplanes)
    : n_(n), hyps_(std::move(hyperplanes)) {
    if (n_ < 1) throw std::invalid_argument("SignedArrangement: n must be >= 1");
    for (auto& h : hyps_) {
        if (h.kind == Hyperplane::Kind::Zero) {
            h.j = 0;
            if (h.i < 1 || h.i > n_)
                throw std::invalid_argument("SignedArrangement: index out of range");
        } else {
            if (h.i > h.j) std::swap(h.i, h.j);
            if (h.i == h.j)
                throw std::invalid_argument("SignedArrangement: i == j");
            if (h.i < 1 || h.j > n_)
                throw std::invalid_argument("SignedArrangement: index out of range");
        }
    }
    std::sort(hyps_.begin(), hyps_.end());
    if (std::adjacent_find(hyps_.begin(), hyps_.end()) != hyps_.end())
        throw std::invalid_argument("SignedArrangement: duplicate hyperplane");
}

SignedArrangement SignedArrangement::parse(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string l;
    if (!next(l)) throw ParseError("arrangement: empty input");
    std::istringstream header(l);
    int n, m;
    if (!(header >> n >> m))
        throw ParseError("arrangement: bad header at line " + std::to_string(lineno));
    std::vector<Hyperplane> hyps;
    for (int k = 0; k < m; ++k) {
        if (!next(l))
            throw ParseError("arrangement: expected " + std::to_string(m) +
                             " hyperplanes, got " + std::to_string(k));
        std::istringstream hs(l);
        std::string kind;
        hs >> kind;
        Hyperplane h;
        if (kind == "zero") {
            h.kind = Hyperplane::Kind::Zero;
            if (!(hs >> h.i))
                throw ParseError("arrangement: bad line " + std::to_string(lineno));
        } else if (kind == "eq" || kind == "ne") {
            h.kind = kind == "eq" ? Hyperplane::Kind::Eq : Hyperplane::Kind::Ne;
            if (!(hs >> h.i >> h.j))
                throw ParseError("arrangement: bad line " + std::to_string(lineno));
        } else {
            throw ParseError("arrangement: unknown kind '" + kind + "' at line " +
                             std::to_string(lineno));
        }
        hyps.push_back(h);
    }
    return SignedArrangement(n, std::move(hyps));
}

std::string SignedArrangement::format() const {
    std::ostringstream os;
    os << n_ << " " << hyps_.size() << "\n";
    for (const auto& h : hyps_) {
        switch (h.kind) {
            case Hyperplane::Kind::Eq: os << "eq " << h.i << " " << h.j; break;
            case Hyperplane::Kind::Ne: os << "ne " << h.i << " " << h.j; break;
            case Hyperplane::Kind::Zero: os << "zero " << h.i; break;
        }
        os << "\n";
    }
    return os.str();
}

SignedArrangement full_bn(int n) {
    std::vector<Hyperplane> hyps;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            hyps.push_back({Hyperplane::Kind::Eq, i, j});
            hyps.push_back({Hyperplane::Kind::Ne, i, j});
        }
    for (int i = 1; i <= n; ++i) hyps.push_back({Hyperplane::Kind::Zero, i});
    return SignedArrangement(n, std::move(hyps));
}

SignedArrangement graphic(const Graph& g) {
    std::vector<Hyperplane> hyps;
    for (auto [u, v] : g.edges()) hyps.push_back({Hyperplane::Kind::Eq, u, v});
    return SignedArrangement(g.n(), std::move(hyps));
}

namespace {

std::vector<std::vector<long>> normal_matrix(const SignedArrangement& a) {
    std::vector<std::vector<long>> rows;
    for (const auto& h : a.hyperplanes()) {
        std::vector<long> v(a.n(), 0);
        switch (h.kind) {
            case Hyperplane::Kind::Eq: v[h.i - 1] = 1; v[h.j - 1] = -1; break;
            case Hyperplane::Kind::Ne: v[h.i - 1] = 1; v[h.j - 1] = 1; break;
            case Hyperplane::Kind::Zero: v[h.i - 1] = 1; break;
        }
        rows.push_back(std::move(v));
    }
    return rows;
}

int rational_rank(std::vector<std::vector<long>> m, int cols) {
    // Fraction-free elimination; entries stay tiny at these sizes.
    std::vector<std::vector<BigInt>> a;
    for (auto& row : m) a.emplace_back(row.begin(), row.end());
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(a.size()); ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < static_cast<int>(a.size()); ++i) {
            if (a[i][c] == 0) continue;
            BigInt f = a[i][c], p = a[r][c];
            for (int k = c; k < cols; ++k) a[i][k] = a[i][k] * p - a[r][k] * f;
        }
        ++r;
    }
    return r;
}

std::vector<long> odd_primes(int count) {
    std::vector<long> out;
    for (long q = 3; static_cast<int>(out.size()) < count; q += 2) {
        bool prime = true;
        for (long d = 3; d * d <= q; d += 2)
            if (q % d == 0) { prime = false; break; }
        if (prime) out.push_back(q);
    }
    return out;
}

// #{x in F_q^n avoiding every hyperplane}; q must be odd.
BigInt count_points(const SignedArrangement& a, long q) {
    const int n = a.n();
    std::vector<long> x(n, 0);
    BigInt count = 0;
    const auto& hyps = a.hyperplanes();
    while (true) {
        bool ok = true;
        for (const auto& h : hyps) {
            long val;
            switch (h.kind) {
                case Hyperplane::Kind::Eq: val = (x[h.i - 1] - x[h.j - 1]) % q; break;
                case Hyperplane::Kind::Ne: val = (x[h.i - 1] + x[h.j - 1]) % q; break;
                default: val = x[h.i - 1] % q; break;
            }
            if (val == 0) { ok = false; break; }
        }
        if (ok) ++count;
        int pos = 0;
        while (pos < n && ++x[pos] == q) x[pos++] = 0;
        if (pos == n) break;
    }
    return count;
}

}  // namespace

int rank(const SignedArrangement& a) {
    return rational_rank(normal_matrix(a), a.n());
}

std::pair<Polynomial, int> char_poly(const SignedArrangement& a) {
    const int n = a.n();
    const int r = rank(a);
    if (r == 0) return {Polynomial::constant(1), 0};
    if (n > 6) throw LimitExceeded("char_poly: point counting limited to n <= 6");
    auto primes = odd_primes(r + 2);
    std::vector<std::pair<BigInt, BigInt>> points;
    for (int k = 0; k <= r; ++k) {
        long q = primes[k];
        BigInt total = count_points(a, q);
        BigInt scale = 1;
        for (int i = 0; i < n - r; ++i) scale *= q;
        if (total % scale != 0)
            throw NonIntegralResult("char_poly: point count not divisible by q^(n-r)");
        points.emplace_back(q, total / scale);
    }
    Polynomial chi = interpolate(points);
    if (chi.degree() != r || chi.coeff(r) != 1)
        throw CrossCheckFailure("char_poly: result not monic of degree rank");
    long q = primes[r + 1];
    BigInt scale = 1;
    for (int i = 0; i < n - r; ++i) scale *= q;
    if (count_points(a, q) != scale * chi.eval(q))
        throw CrossCheckFailure("char_poly: verification prime disagrees");
    return {chi, r};
}

std::vector<SignedArrangement> enumerate_subarrangements(int n,
                                                         std::uint64_t seed) {
    if (n < 1 || n > 4)
        throw LimitExceeded("enumerate_subarrangements: n must be in [1,4]");
    auto full = full_bn(n);
    const auto& hyps = full.hyperplanes();
    const size_t m = hyps.size();
    std::vector<SignedArrangement> out;
    auto from_mask = [&](std::uint64_t mask) {
        std::vector<Hyperplane> sub;
        for (size_t k = 0; k < m; ++k)
            if ((mask >> k) & 1u) sub.push_back(hyps[k]);
        return SignedArrangement(n, std::move(sub));
    };
    if (n <= 3) {
        for (std::uint64_t mask = 1; mask < (1ull << m); ++mask)
            out.push_back(from_mask(mask));
    } else {
        std::mt19937_64 rng(seed * 1000003u + static_cast<unsigned>(n));
        std::uniform_int_distribution<std::uint64_t> dist(1, (1ull << m) - 1);
        std::set<std::uint64_t> picked;
        while (picked.size() < 200) picked.insert(dist(rng));
        for (auto mask : picked) out.push_back(from_mask(mask));
    }
    return out;
}

}  // namespace ccx
