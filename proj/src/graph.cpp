#include "ccx/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <random>
#include <set>
#include <sstream>

namespace ccx {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("Graph: n must be >= 1");
    if (n_ > 31) throw LimitExceeded("Graph: n > 31 unsupported");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        if (u < 1 || v > n_) throw std::invalid_argument("Graph: vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge");
    adj_.assign(n_, 0);
    for (auto [u, v] : edges_) {
        adj_[u - 1] |= 1u << (v - 1);
        adj_[v - 1] |= 1u << (u - 1);
    }
}

int Graph::degree(int v) const { return std::popcount(adj_[v - 1]); }

bool Graph::has_edge(int u, int v) const {
    return (adj_[u - 1] >> (v - 1)) & 1u;
}

std::uint32_t Graph::adjacency_mask(int v) const { return adj_[v - 1]; }

Graph Graph::parse(std::istream& in) {
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
    if (!next(l)) throw ParseError("graph: empty input");
    std::istringstream header(l);
    int n, m;
    if (!(header >> n >> m))
        throw ParseError("graph: bad header at line " + std::to_string(lineno));
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < m; ++k) {
        if (!next(l))
            throw ParseError("graph: expected " + std::to_string(m) +
                             " edges, got " + std::to_string(k));
        std::istringstream es(l);
        int u, v;
        if (!(es >> u >> v) || u >= v)
            throw ParseError("graph: bad edge at line " + std::to_string(lineno));
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

std::string Graph::format() const {
    std::ostringstream os;
    os << n_ << " " << edges_.size() << "\n";
    for (auto [u, v] : edges_) os << u << " " << v << "\n";
    return os.str();
}

namespace {

// Adjacency-mask representation used inside the deletion-contraction
// recursion; vertices are bit positions 0..n-1.
using AdjList = std::vector<std::uint32_t>;

int count_edges(const AdjList& adj) {
    int m = 0;
    for (auto a : adj) m += std::popcount(a);
    return m / 2;
}

Polynomial falling_factorial(int n) {
    std::vector<BigInt> roots;
    for (int i = 0; i < n; ++i) roots.emplace_back(i);
    return Polynomial::from_roots(roots);
}

AdjList induced(const AdjList& adj, std::uint32_t verts) {
    std::vector<int> map(adj.size(), -1);
    int k = 0;
    for (size_t v = 0; v < adj.size(); ++v)
        if ((verts >> v) & 1u) map[v] = k++;
    AdjList out(k, 0);
    for (size_t v = 0; v < adj.size(); ++v) {
        if (map[v] < 0) continue;
        std::uint32_t nb = adj[v] & verts;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            out[map[v]] |= 1u << map[w];
        }
    }
    return out;
}

Polynomial chrom_connected(const AdjList& adj);

Polynomial chrom_rec(const AdjList& adj) {
    const int n = static_cast<int>(adj.size());
    // Split into connected components.
    std::uint32_t seen = 0;
    Polynomial result = Polynomial::constant(1);
    for (int s = 0; s < n; ++s) {
        if ((seen >> s) & 1u) continue;
        std::uint32_t comp = 1u << s, frontier = comp;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v] & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        result = result * chrom_connected(induced(adj, comp));
    }
    return result;
}

Polynomial chrom_connected(const AdjList& adj) {
    const int n = static_cast<int>(adj.size());
    const int m = count_edges(adj);
    if (m == 0) return Polynomial::monomial(n);
    if (m == n * (n - 1) / 2) return falling_factorial(n);
    if (m == n - 1) {
        // Connected with n-1 edges: a tree, t(t-1)^{n-1}.
        Polynomial p = Polynomial::monomial(1);
        Polynomial edge(IntSeq{-1, 1});
        for (int i = 1; i < n; ++i) p = p * edge;
        return p;
    }
    // Pick the edge with the largest degree sum.
    int bu = -1, bv = -1, best = -1;
    for (int u = 0; u < n; ++u) {
        std::uint32_t nb = adj[u] >> (u + 1) << (u + 1);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            int score = std::popcount(adj[u]) + std::popcount(adj[v]);
            if (score > best) { best = score; bu = u; bv = v; }
        }
    }
    AdjList del = adj;
    del[bu] &= ~(1u << bv);
    del[bv] &= ~(1u << bu);
    // Contract bv into bu (parallel edges merge via the bitmask union).
    AdjList con = adj;
    con[bu] |= con[bv];
    con[bu] &= ~((1u << bu) | (1u << bv));
    for (int w = 0; w < n; ++w) {
        if (w == bu || w == bv) continue;
        if ((con[w] >> bv) & 1u) con[w] |= 1u << bu;
        con[w] &= ~(1u << bv);
    }
    con[bv] = 0;
    std::uint32_t keep = (n == 31 ? ~0u : ((1u << n) - 1)) & ~(1u << bv);
    return chrom_rec(del) - chrom_rec(induced(con, keep));
}

}  // namespace

Polynomial chromatic_polynomial(const Graph& g) {
    AdjList adj(g.n());
    for (int v = 1; v <= g.n(); ++v) adj[v - 1] = g.adjacency_mask(v);
    return chrom_rec(adj);
}

BigInt acyclic_orientation_count(const Graph& g) {
    BigInt v = chromatic_polynomial(g).eval(-1);
    return g.n() % 2 ? -v : v;
}

std::optional<int> has_dominating_vertex(const Graph& g) {
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) == g.n() - 1) return v;
    return std::nullopt;
}

namespace {

std::vector<std::pair<int, int>> edges_from_mask(
    int n, std::uint64_t mask, const std::vector<std::pair<int, int>>& all) {
    std::vector<std::pair<int, int>> e;
    for (size_t k = 0; k < all.size(); ++k)
        if ((mask >> k) & 1u) e.push_back(all[k]);
    return e;
}

}  // namespace

std::vector<Graph> corpus(int max_n, std::uint64_t sample_seed) {
    if (max_n < 2 || max_n > 7)
        throw LimitExceeded("corpus: max_n must be in [2,7]");
    std::vector<Graph> out;
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
        std::vector<std::pair<int, int>> all;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
        std::uint64_t total = 1ull << all.size();
        for (std::uint64_t mask = 1; mask < total; ++mask)
            out.emplace_back(n, edges_from_mask(n, mask, all));
    }
    for (int n = 6; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> all;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
        std::mt19937_64 rng(sample_seed * 1000003u + static_cast<unsigned>(n));
        std::uniform_int_distribution<std::uint64_t> dist(
            1, (1ull << all.size()) - 1);
        std::set<std::uint64_t> picked;
        while (picked.size() < 200) picked.insert(dist(rng));
        for (auto mask : picked)
            out.emplace_back(n, edges_from_mask(n, mask, all));
    }
    return out;
}

}  // namespace ccx
