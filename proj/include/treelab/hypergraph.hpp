#pragma once

#include "treelab/bitstring.hpp"
#include "treelab/clopen.hpp"
#include "treelab/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace treelab {

struct Edge {
    std::set<BitString> vertices;
    Rational weight; // >= 0
};

/// Weighted string-hypergraph: vertices are strings with implicit weight
/// ν(σ) = 2^{-|σ|}, edges carry non-negative rational weights. Edges are a
/// list, so multi-edges are allowed; the kernel merges them.
class StringHypergraph {
public:
    StringHypergraph() = default;
    StringHypergraph(std::set<BitString> vertices, std::vector<Edge> edges);

    /// Vertex set inferred as the union of the edges.
    explicit StringHypergraph(std::vector<Edge> edges);

    const std::set<BitString>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    Rational vertex_weight(const BitString& v) const {
        return Dyadic::cylinder(static_cast<unsigned>(v.length())).to_rational();
    }

    /// ewt(v): total weight of the edges containing v.
    Rational edge_weight_of(const BitString& v) const;

    /// δ: total weight of all edges.
    Rational total_edge_weight() const;

    bool is_k_fat(std::size_t k) const;

    ClopenSet vertex_clopen() const { return ClopenSet(vertices_); }

private:
    std::set<BitString> vertices_;
    std::vector<Edge> edges_;
};

/// Kernel of a string-hypergraph: vertices collapsed to the prefix-minimal
/// antichain, edges rewritten through it and merged with summed weights.
struct KernelGraph {
    StringHypergraph graph;
    std::vector<std::size_t> provenance;   // source edge index -> kernel edge index
    std::vector<std::size_t> source_sizes; // per kernel edge: min source edge size
    // ewt*(σ*) = Σ ewt(σ) over source vertices σ extending σ*. This is the
    // kernel's edge-weight function; it exceeds the collapsed-edge count when
    // one source edge holds several vertices with the same projection.
    std::map<BitString, Rational> transfer_ewt;
};

KernelGraph kernel(const StringHypergraph& h);

struct FatnessReport {
    Rational sum;   // Σ ewt(σ) over vertices
    Rational bound; // k · δ
    bool holds = false;
};

/// The fatness inequality Σ ewt(σ) >= k·δ. Requires H k-fat; use the
/// KernelGraph overload for kernels of k-fat graphs.
FatnessReport fatness_sum(const StringHypergraph& h, std::size_t k);
FatnessReport fatness_sum(const KernelGraph& kg, std::size_t k);

/// g(τ): total weight of the edges containing an extension of τ.
Rational extension_edge_weight(const StringHypergraph& h, const BitString& tau);

/// Shortest (then lexicographically least) prefix τ of a vertex with
/// g(τ) >= threshold·k·2^{-|τ|}. The threshold defaults to the total edge
/// weight δ, in which case existence is guaranteed for k-fat graphs with
/// δ > 0; a caller may pass a smaller threshold (the covering loop does).
std::optional<BitString> light_vertex(const StringHypergraph& h, std::size_t k,
                                      std::optional<Rational> threshold = std::nullopt);

} // namespace treelab
