#ifndef DETSIEVE_ENUMERATORS_HPP
#define DETSIEVE_ENUMERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "detsieve/circuit.hpp"
#include "detsieve/graph.hpp"
#include "detsieve/matroid.hpp"
#include "detsieve/poly_oracle.hpp"

namespace detsieve {

// Named variable blocks with index ranges; the oracle arity is the
// total across blocks.
struct VariableLayout {
    struct Block {
        std::string name;
        std::size_t offset;
        std::size_t count;
    };
    std::vector<Block> blocks;
    std::size_t arity = 0;

    std::size_t add_block(const std::string& name, std::size_t count);
    const Block& block(const std::string& name) const;
    bool has_block(const std::string& name) const;
    std::size_t index(const std::string& name, std::size_t i) const;
    std::vector<std::size_t> indices(const std::string& name) const;
};

// Labelled k-walk enumerator x_{s,0} e_s^T A_1 ... A_k e_t.
// Blocks: "x0" (1), "xv" (k*n, slot (i,v) at (i-1)*n+v), "xe" (k*m).
struct WalkPoly {
    PolyOracle oracle;
    VariableLayout layout;
    std::size_t steps = 0;
};
WalkPoly walk_poly(const FieldCtx& ctx, const Graph& g, std::size_t s, std::size_t t,
                   std::size_t k);

// det(A1 diag(X) A2^T): enumerates common bases of the two k x n
// representations, weighted by the two subdeterminants.
PolyOracle cauchy_binet_poly(const Matrix& a1, const Matrix& a2);

// Tutte-matrix Pfaffian enumerator for perfect matchings; the
// k-matching variant pads with universal vertices carrying fixed
// random constants. Block: "xe" (m).
struct MatchingPoly {
    PolyOracle oracle;
    VariableLayout layout;
};
MatchingPoly matching_poly(const FieldCtx& ctx, const Graph& g,
                           std::optional<std::size_t> k = std::nullopt, Rng* rng = nullptr);

// Properly ordered branching walks of size k. Blocks: "xv" (n),
// "ya" (2m; arc (u->v) of edge e at 2e, the reverse at 2e+1, with u<v).
struct BranchingWalk {
    PolyOracle oracle;
    VariableLayout layout;
};
BranchingWalk branching_walk_poly(const FieldCtx& ctx, const Graph& g, std::size_t k,
                                  std::optional<std::size_t> start = std::nullopt);

// Tree-expanded circuit for the same polynomial over per-occurrence
// copy variables; strongly monotone by construction. Intended for the
// extensor path and the monotonicity checker at small sizes.
struct BranchingWalkCircuit {
    ArithCircuit circuit;
    std::vector<std::ptrdiff_t> copy_vertex;  // per copy var: vertex id or -1
    std::vector<std::ptrdiff_t> copy_arc;     // per copy var: arc id (2e+dir) or -1
};
BranchingWalkCircuit branching_walk_circuit(const FieldCtx& ctx, const Graph& g, std::size_t k,
                                            std::optional<std::size_t> start = std::nullopt);

enum class LinkageMode { EdgeVars, VertexVars };

// Modified-Tutte-matrix determinant enumerating padded perfect
// (S,T)-linkage terms. Performs the preprocessing (deletes S cap T,
// drops edges inside S and inside T, subdivides S-T edges). Blocks:
// "xe" (m'), plus "xv" (n') in vertex-variable mode.
struct LinkageDet {
    struct Entry {
        enum class Kind { Zero, One, Var };
        Kind kind = Kind::Zero;
        std::size_t edge = 0;
        std::size_t u = 0, v = 0;  // endpoints for the vertex-variable substitution
    };

    PolyOracle oracle;
    VariableLayout layout;
    Graph graph;  // preprocessed
    LinkageMode mode = LinkageMode::EdgeVars;
    std::vector<std::ptrdiff_t> vertex_origin;  // original id, -1 for subdivision vertices
    std::vector<std::size_t> edge_zweight;      // length contribution (0 on split-edge halves)
    // original endpoints per edge; (-1,-1) on the zero-weight half of a split edge
    std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> edge_origin;
    std::vector<std::size_t> S, T;              // preprocessed ids, pairing order
    std::vector<std::vector<Entry>> pattern;    // the symbolic matrix
};
LinkageDet stpath_linkage_det(const FieldCtx& ctx, const Graph& g, std::vector<std::size_t> S,
                              std::vector<std::size_t> T, LinkageMode mode);

// Pfaffian of the T x T matrix of unlabelled walk polynomials of
// length <= k. Block: "xe" (m).
struct TJoinPoly {
    PolyOracle oracle;
    VariableLayout layout;
};
TJoinPoly tjoin_poly(const FieldCtx& ctx, const Graph& g, const std::vector<std::size_t>& T,
                     std::size_t k);

enum class BranchingSense { Out, In };

// Principal minor of the symbolic arc Laplacian; monomials are the
// out-branchings (in-branchings under Sense::In) rooted at `root`.
// Block: "xa" (m arcs).
struct BranchingPoly {
    PolyOracle oracle;
    VariableLayout layout;
};
BranchingPoly branching_poly(const FieldCtx& ctx, const Graph& g, std::size_t root,
                             BranchingSense sense);

}  // namespace detsieve

#endif
