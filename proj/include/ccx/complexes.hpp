#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccx/arrangement.hpp"
#include "ccx/core_math.hpp"
#include "ccx/graph.hpp"

namespace ccx {

struct NoEdges : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VertexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAComplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyArrangement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A face of the coloring / unipolar complex: a strictly increasing chain
/// S_1 < S_2 < ... < S_r of nonempty proper subsets of [n], as bitmasks.
/// Dimension is r - 1.
struct ChainFace {
    std::vector<std::uint32_t> sets;
    int dim() const { return static_cast<int>(sets.size()) - 1; }
    auto operator<=>(const ChainFace&) const = default;
};

/// A cell of the type-B Coxeter sphere: coordinates in zero_set vanish,
/// the remaining ones are grouped by increasing absolute value into
/// ordered blocks, with a sign per element (bits of neg within mask).
/// Dimension is blocks.size() - 1.
struct SignedBlockFace {
    std::uint32_t zero_set = 0;
    struct Block {
        std::uint32_t mask = 0;  // elements of the block
        std::uint32_t neg = 0;   // subset of mask carrying sign -
        auto operator<=>(const Block&) const = default;
    };
    std::vector<Block> blocks;
    int dim() const { return static_cast<int>(blocks.size()) - 1; }
    auto operator<=>(const SignedBlockFace&) const = default;
};

struct ComplexSummary {
    int dim = -1;          // -1 for the empty complex
    IntSeq f;              // f_0..f_dim (f_{-1} = 1 implicit)
    IntSeq h;              // h_0..h_{dim+1}
    bool pure = true;
};

/// All chains whose associated full ordered partition (including the
/// complement of the top set) has a block containing an edge of G.
/// Sorted by (length, lexicographic bitmask order); closed under subchains.
std::vector<ChainFace> build_coloring_complex(const Graph& g);

/// Faces of the coloring complex whose top set avoids v.
std::vector<ChainFace> build_unipolar_complex(const Graph& g, int v);

/// Cells of the type-B Coxeter sphere lying in at least one hyperplane of A.
std::vector<SignedBlockFace> build_bn_restriction(const SignedArrangement& a);

/// Standard f -> h transform; f has length dim+1, h has length dim+2.
IntSeq h_from_f(const IntSeq& f, int dim);

/// Coning twice preserves h-entries; append two zeros.
IntSeq double_cone_h(const IntSeq& h);

ComplexSummary summarize(const std::vector<ChainFace>& faces);
ComplexSummary summarize(const std::vector<SignedBlockFace>& cells);

/// Reduced rational Betti numbers beta_{-1}..beta_dim.  Exact Gaussian
/// elimination for small boundary matrices, modular rank at two distinct
/// primes > 2^30 (with agreement check) for large ones.
IntSeq reduced_betti(const std::vector<ChainFace>& faces);

/// Dump formats used by the CLI --dump-faces flag.
std::string face_to_string(const ChainFace& f);
std::string face_to_string(const SignedBlockFace& f);

}  // namespace ccx
