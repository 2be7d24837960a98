#pragma once

#include "treelab/clopen.hpp"
#include "treelab/complexity.hpp"
#include "treelab/density.hpp"
#include "treelab/expander.hpp"
#include "treelab/hitting.hpp"
#include "treelab/hypergraph.hpp"

#include <cstdint>
#include <random>

namespace treelab {

/// Deterministic seeded source for instance generation. mt19937_64 is fully
/// specified by the standard, so a given seed reproduces the same corpus on
/// any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }
    bool coin() { return (eng_() & 1) != 0; }

    BitString string(std::size_t len) {
        std::string s;
        for (std::size_t i = 0; i < len; ++i) s += coin() ? '1' : '0';
        return BitString(s);
    }

    /// Random small positive rational a/b with b <= 16.
    Rational small_rational() {
        return Rational(static_cast<long>(1 + below(8)), BigInt(1 + below(16)));
    }

private:
    std::mt19937_64 eng_;
};

/// k-fat hypergraph with vertex depth <= max_depth and at most max_edges
/// edges, all weights positive.
StringHypergraph random_k_fat_hypergraph(Rng& rng, std::size_t k, std::size_t max_depth,
                                         std::size_t max_edges);

/// General hypergraph (no fatness guarantee) for kernel/conservation checks.
StringHypergraph random_hypergraph(Rng& rng, std::size_t max_depth, std::size_t max_edges);

/// Staged expander: oracle depth <= oracle_depth, outputs at depth
/// <= out_depth, entries at the given arity spread over a few stages.
StagedExpander random_expander(Rng& rng, std::size_t k, std::size_t oracle_depth,
                               std::size_t out_depth);

/// Prefix machine with at most max_entries programs.
PrefixMachine random_machine(Rng& rng, std::size_t max_entries);

/// Hitting instance whose effective edges carry at most max_total_vertices
/// members in total.
HittingInstance random_hitting_instance(Rng& rng, std::size_t max_total_vertices);

/// Pruned tree of the given depth: the full tree minus a few random leaves,
/// never all of them.
FinTree random_dense_tree(Rng& rng, std::size_t depth, std::size_t leaves_removed);

struct DenseExtInput {
    LDF d;
    LevelSet e;
    FinTree t;
};

/// (d, E, T) triple meeting the dense-extension precondition.
DenseExtInput random_dense_ext_input(Rng& rng);

/// Valid condition with enough depth for condensation and branching.
Condition random_condition(Rng& rng);

/// H-family for the divergence partition satisfying the per-τ mass
/// hypothesis Σ_σ μ_τ(H(σ,τ)) < 2^{k-e-n-4}.
std::map<std::pair<BitString, BitString>, ClopenSet> random_divergence_family(
    Rng& rng, unsigned k, unsigned e, unsigned n, const LevelSet& q);

} // namespace treelab
