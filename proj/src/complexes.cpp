#include "ccx/complexes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace ccx {

namespace {

// has_edge[mask]: some edge of g has both endpoints inside mask.
std::vector<char> edge_table(const Graph& g) {
    std::vector<char> t(1u << g.n(), 0);
    for (std::uint32_t mask = 0; mask < t.size(); ++mask)
        for (auto [u, v] : g.edges())
            if (((mask >> (u - 1)) & 1u) && ((mask >> (v - 1)) & 1u)) {
                t[mask] = 1;
                break;
            }
    return t;
}

void canonical_sort(std::vector<ChainFace>& faces) {
    std::sort(faces.begin(), faces.end(),
              [](const ChainFace& a, const ChainFace& b) {
                  if (a.sets.size() != b.sets.size())
                      return a.sets.size() < b.sets.size();
                  return a.sets < b.sets;
              });
}

}  // namespace

std::vector<ChainFace> build_coloring_complex(const Graph& g) {
    if (g.edge_count() == 0)
        throw NoEdges("build_coloring_complex: graph has no edges");
    const int n = g.n();
    const std::uint32_t full = (1u << n) - 1;
    auto has_edge = edge_table(g);
    std::vector<ChainFace> out;
    std::vector<std::uint32_t> chain;
    // accept: some block of the full ordered partition (differences of
    // [empty] + chain + [full]) contains an edge.
    auto accept = [&]() {
        std::uint32_t prev = 0;
        for (auto s : chain) {
            if (has_edge[s & ~prev]) return true;
            prev = s;
        }
        return has_edge[full & ~prev] != 0;
    };
    auto extend = [&](auto&& self, std::uint32_t top) -> void {
        if (accept()) out.push_back({chain});
        // strict supersets of top that are still proper subsets of [n]
        std::uint32_t rest = full & ~top;
        for (std::uint32_t add = (rest - 1) & rest;; add = (add - 1) & rest) {
            std::uint32_t s = top | add;
            if (add != 0 && s != full) {
                chain.push_back(s);
                self(self, s);
                chain.pop_back();
            }
            if (add == 0) break;
        }
    };
    for (std::uint32_t s = 1; s < full; ++s) {
        chain.assign(1, s);
        extend(extend, s);
    }
    canonical_sort(out);
    return out;
}

std::vector<ChainFace> build_unipolar_complex(const Graph& g, int v) {
    if (v < 1 || v > g.n())
        throw VertexOutOfRange("build_unipolar_complex: vertex " +
                               std::to_string(v));
    auto faces = build_coloring_complex(g);
    std::uint32_t bit = 1u << (v - 1);
    std::erase_if(faces, [&](const ChainFace& f) { return f.sets.back() & bit; });
    return faces;
}

std::vector<SignedBlockFace> build_bn_restriction(const SignedArrangement& a) {
    if (a.empty())
        throw EmptyArrangement("build_bn_restriction: empty arrangement");
    const int n = a.n();
    if (n > 5) throw LimitExceeded("build_bn_restriction: n <= 5 only");
    const std::uint32_t full = (1u << n) - 1;

    auto contained = [&](const SignedBlockFace& c) {
        auto locate = [&](int x) -> const SignedBlockFace::Block* {
            std::uint32_t bit = 1u << (x - 1);
            for (const auto& b : c.blocks)
                if (b.mask & bit) return &b;
            return nullptr;
        };
        for (const auto& h : a.hyperplanes()) {
            switch (h.kind) {
                case Hyperplane::Kind::Zero:
                    if (c.zero_set & (1u << (h.i - 1))) return true;
                    break;
                case Hyperplane::Kind::Eq:
                case Hyperplane::Kind::Ne: {
                    std::uint32_t bi = 1u << (h.i - 1), bj = 1u << (h.j - 1);
                    if ((c.zero_set & bi) && (c.zero_set & bj)) return true;
                    const auto* fi = locate(h.i);
                    const auto* fj = locate(h.j);
                    if (!fi || !fj || fi != fj) break;
                    bool same_sign = ((fi->neg >> (h.i - 1)) & 1u) ==
                                     ((fj->neg >> (h.j - 1)) & 1u);
                    if ((h.kind == Hyperplane::Kind::Eq) == same_sign) return true;
                    break;
                }
            }
        }
        return false;
    };

    std::vector<SignedBlockFace> out;
    SignedBlockFace cell;
    // Partition the support into ordered blocks, then assign signs.
    auto signs = [&](auto&& self, size_t bi) -> void {
        if (bi == cell.blocks.size()) {
            if (contained(cell)) out.push_back(cell);
            return;
        }
        std::uint32_t mask = cell.blocks[bi].mask;
        // every subset of mask as the negative part
        std::uint32_t sub = 0;
        while (true) {
            cell.blocks[bi].neg = sub;
            self(self, bi + 1);
            if (sub == mask) break;
            sub = (sub - mask) & mask;
        }
        cell.blocks[bi].neg = 0;
    };
    auto partition = [&](auto&& self, std::uint32_t rest) -> void {
        if (rest == 0) {
            signs(signs, 0);
            return;
        }
        // first block: any nonempty subset of rest (blocks are ordered)
        for (std::uint32_t block = rest; block; block = (block - 1) & rest) {
            cell.blocks.push_back({block, 0});
            self(self, rest & ~block);
            cell.blocks.pop_back();
        }
    };
    for (std::uint32_t z = 0; z <= full; ++z) {
        if (z == full) continue;  // blocks must cover a nonempty set
        cell.zero_set = z;
        cell.blocks.clear();
        partition(partition, full & ~z);
    }
    std::sort(out.begin(), out.end(),
              [](const SignedBlockFace& x, const SignedBlockFace& y) {
                  if (x.blocks.size() != y.blocks.size())
                      return x.blocks.size() < y.blocks.size();
                  if (x.zero_set != y.zero_set) return x.zero_set < y.zero_set;
                  return x.blocks < y.blocks;
              });
    return out;
}

IntSeq h_from_f(const IntSeq& f, int dim) {
    if (static_cast<int>(f.size()) != dim + 1)
        throw LengthMismatch("h_from_f: f must have length dim+1");
    const int d = dim + 1;
    auto fv = [&](int i) -> BigInt { return i < 0 ? BigInt(1) : f[i]; };
    IntSeq h(d + 1);
    for (int j = 0; j <= d; ++j) {
        BigInt s = 0;
        for (int i = 0; i <= j; ++i) {
            BigInt term = binomial(d - i, j - i) * fv(i - 1);
            if ((j - i) % 2) s -= term; else s += term;
        }
        h[j] = s;
    }
    return h;
}

IntSeq double_cone_h(const IntSeq& h) {
    if (h.empty())
        throw std::invalid_argument("double_cone_h: input must be nonempty");
    IntSeq out = h;
    out.push_back(0);
    out.push_back(0);
    return out;
}

namespace {

template <typename Face, typename DimFn>
ComplexSummary summarize_impl(const std::vector<Face>& faces, DimFn dim_of) {
    ComplexSummary s;
    for (const auto& f : faces) s.dim = std::max(s.dim, dim_of(f));
    s.f.assign(s.dim + 1, 0);
    for (const auto& f : faces) s.f[dim_of(f)] += 1;
    s.h = h_from_f(s.f, s.dim);
    return s;
}

}  // namespace

ComplexSummary summarize(const std::vector<ChainFace>& faces) {
    auto s = summarize_impl(faces, [](const ChainFace& f) { return f.dim(); });
    // pure iff every face is a subchain of some top-dimensional face
    std::set<ChainFace> covered;
    for (const auto& f : faces) {
        if (f.dim() != s.dim) continue;
        const size_t r = f.sets.size();
        for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
            ChainFace sub;
            for (size_t k = 0; k < r; ++k)
                if ((mask >> k) & 1u) sub.sets.push_back(f.sets[k]);
            covered.insert(std::move(sub));
        }
    }
    s.pure = std::all_of(faces.begin(), faces.end(), [&](const ChainFace& f) {
        return covered.count(f) > 0;
    });
    return s;
}

namespace {

// Codimension-1 faces of a type-B cell: merge two adjacent blocks, or
// absorb the first block into the zero set.
std::vector<SignedBlockFace> cell_boundary(const SignedBlockFace& c) {
    std::vector<SignedBlockFace> out;
    const size_t r = c.blocks.size();
    if (r >= 2) {
        SignedBlockFace g = c;
        g.zero_set |= g.blocks.front().mask;
        g.blocks.erase(g.blocks.begin());
        out.push_back(std::move(g));
    }
    for (size_t i = 0; i + 1 < r; ++i) {
        SignedBlockFace g = c;
        g.blocks[i].mask |= g.blocks[i + 1].mask;
        g.blocks[i].neg |= g.blocks[i + 1].neg;
        g.blocks.erase(g.blocks.begin() + i + 1);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

ComplexSummary summarize(const std::vector<SignedBlockFace>& cells) {
    auto s = summarize_impl(cells,
                            [](const SignedBlockFace& f) { return f.dim(); });
    std::set<SignedBlockFace> covered;
    auto close = [&](auto&& self, const SignedBlockFace& c) -> void {
        if (!covered.insert(c).second) return;
        for (const auto& g : cell_boundary(c)) self(self, g);
    };
    for (const auto& c : cells)
        if (c.dim() == s.dim) close(close, c);
    s.pure = std::all_of(cells.begin(), cells.end(),
                         [&](const SignedBlockFace& c) {
                             return covered.count(c) > 0;
                         });
    return s;
}

// ---------------------------------------------------------------------------
// Reduced Betti numbers
// ---------------------------------------------------------------------------

namespace {

int exact_rank(std::vector<std::vector<BigInt>> a) {
    if (a.empty()) return 0;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            BigInt f = a[i][c], p = a[r][c];
            for (int k = c; k < cols; ++k) a[i][k] = a[i][k] * p - a[r][k] * f;
        }
        ++r;
    }
    return r;
}

// Sparse column reduction mod p; columns are sorted (row, coeff) lists.
using SparseCol = std::vector<std::pair<int, std::int64_t>>;

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return t < 0 ? t + p : t;
}

void add_scaled(SparseCol& dst, const SparseCol& src, std::int64_t factor,
                std::int64_t p) {
    SparseCol out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            std::int64_t v =
                static_cast<std::int64_t>(
                    static_cast<__int128>(src[j].second) * factor % p);
            if (v) out.emplace_back(src[j].first, v);
            ++j;
        } else {
            std::int64_t v =
                static_cast<std::int64_t>(
                    (dst[i].second + static_cast<__int128>(src[j].second) * factor) %
                    p);
            if (v) out.emplace_back(dst[i].first, v);
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

int modular_rank(std::vector<SparseCol> cols, std::int64_t p) {
    for (auto& col : cols)
        for (auto& [row, v] : col) v = ((v % p) + p) % p;
    std::map<int, int> pivot_of_low;  // low row -> column index
    int rank = 0;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            int low = col.back().first;
            auto it = pivot_of_low.find(low);
            if (it == pivot_of_low.end()) break;
            const auto& piv = cols[it->second];
            std::int64_t factor = static_cast<std::int64_t>(
                static_cast<__int128>(p - col.back().second) *
                mod_inverse(piv.back().second, p) % p);
            add_scaled(col, piv, factor, p);
        }
        if (!col.empty()) {
            pivot_of_low[col.back().first] = j;
            ++rank;
        }
    }
    return rank;
}

constexpr std::int64_t kPrimeA = 1073741827;  // > 2^30
constexpr std::int64_t kPrimeB = 1073741831;

int boundary_rank(const std::vector<SparseCol>& cols, int rows) {
    std::int64_t max_dim = std::max<std::int64_t>(rows, cols.size());
    if (max_dim < 300) {
        std::vector<std::vector<BigInt>> dense(
            rows, std::vector<BigInt>(cols.size(), 0));
        for (size_t j = 0; j < cols.size(); ++j)
            for (auto [i, v] : cols[j]) dense[i][j] = v;
        return exact_rank(std::move(dense));
    }
    int ra = modular_rank(cols, kPrimeA);
    int rb = modular_rank(cols, kPrimeB);
    if (ra != rb)
        throw std::runtime_error("boundary_rank: modular ranks disagree");
    return ra;
}

}  // namespace

IntSeq reduced_betti(const std::vector<ChainFace>& faces) {
    if (faces.empty()) return IntSeq{1};  // only the empty face
    std::set<ChainFace> present(faces.begin(), faces.end());
    int maxdim = 0;
    for (const auto& f : faces) {
        maxdim = std::max(maxdim, f.dim());
        for (size_t k = 0; k < f.sets.size(); ++k) {
            if (f.sets.size() == 1) continue;
            ChainFace sub = f;
            sub.sets.erase(sub.sets.begin() + k);
            if (!present.count(sub))
                throw NotAComplex("reduced_betti: not closed under subchains");
        }
    }
    // index faces per dimension
    std::vector<std::map<ChainFace, int>> index(maxdim + 1);
    for (const auto& f : faces) {
        auto& m = index[f.dim()];
        int id = static_cast<int>(m.size());
        m.emplace(f, id);
    }
    std::vector<int> ranks(maxdim + 2, 0);
    ranks[0] = index[0].empty() ? 0 : 1;  // augmentation to the empty face
    for (int d = 1; d <= maxdim; ++d) {
        std::vector<SparseCol> cols(index[d].size());
        for (const auto& [f, j] : index[d]) {
            SparseCol col;
            for (size_t k = 0; k < f.sets.size(); ++k) {
                ChainFace sub = f;
                sub.sets.erase(sub.sets.begin() + k);
                col.emplace_back(index[d - 1].at(sub), (k % 2) ? -1 : 1);
            }
            std::sort(col.begin(), col.end());
            cols[j] = std::move(col);
        }
        ranks[d] = boundary_rank(cols, static_cast<int>(index[d - 1].size()));
    }
    IntSeq betti(maxdim + 2);  // indices -1..maxdim shifted by one
    betti[0] = 0;              // beta_{-1}; complex nonempty here
    for (int d = 0; d <= maxdim; ++d)
        betti[d + 1] = BigInt(static_cast<long>(index[d].size())) - ranks[d] -
                       ranks[d + 1];
    return betti;
}

std::string face_to_string(const ChainFace& f) {
    std::ostringstream os;
    for (size_t k = 0; k < f.sets.size(); ++k) {
        if (k) os << "|";
        bool first = true;
        for (int v = 0; v < 32; ++v)
            if ((f.sets[k] >> v) & 1u) {
                if (!first) os << ",";
                os << (v + 1);
                first = false;
            }
    }
    return os.str();
}

std::string face_to_string(const SignedBlockFace& f) {
    std::ostringstream os;
    os << "z:{";
    bool first = true;
    for (int v = 0; v < 32; ++v)
        if ((f.zero_set >> v) & 1u) {
            if (!first) os << ",";
            os << (v + 1);
            first = false;
        }
    os << "}";
    for (const auto& b : f.blocks) {
        os << " b:{";
        first = true;
        for (int v = 0; v < 32; ++v)
            if ((b.mask >> v) & 1u) {
                if (!first) os << ",";
                os << (((b.neg >> v) & 1u) ? "-" : "+") << (v + 1);
                first = false;
            }
        os << "}";
    }
    return os.str();
}

}  // namespace ccx
