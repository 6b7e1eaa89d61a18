#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "ccx/core_math.hpp"

namespace ccx {

struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Labeled simple graph on vertices 1..n.  Isolated vertices are fine;
/// n is independent of the edge set.
class Graph {
  public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int degree(int v) const;
    bool has_edge(int u, int v) const;
    /// Bitmask of neighbors of v (bit k set means vertex k+1 adjacent).
    std::uint32_t adjacency_mask(int v) const;

    /// Text format: first line "n m", then m lines "u v" (u < v);
    /// blank lines and '#' comments ignored.
    static Graph parse(std::istream& in);
    std::string format() const;

    bool operator==(const Graph& o) const = default;

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint32_t> adj_;
};

/// Classical deletion-contraction; P_G is monic of degree n with zero
/// constant term (t^n for the edgeless graph).
Polynomial chromatic_polynomial(const Graph& g);

/// a(G) = (-1)^n P_G(-1).
BigInt acyclic_orientation_count(const Graph& g);

/// Least vertex of degree n-1, if any.
std::optional<int> has_dominating_vertex(const Graph& g);

/// All labeled graphs with >= 1 edge for n <= min(max_n, 5); deterministic
/// samples of 200 graphs each for n = 6, 7 when max_n reaches them.
std::vector<Graph> corpus(int max_n, std::uint64_t sample_seed);

}  // namespace ccx
