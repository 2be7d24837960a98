#pragma once

#include "treelab/clopen.hpp"
#include "treelab/dyadic.hpp"
#include "treelab/rational.hpp"
#include "treelab/tree.hpp"

#include <map>
#include <set>
#include <vector>

namespace treelab {

/// Family of finite trees (edges, given as level sets) over a base level Q.
/// The effective family ℱ(Q) consists of the edges extending Q.
struct HittingInstance {
    std::vector<LevelSet> family;
    LevelSet base; // Q

    /// Edges D with Q ⪯ D.
    std::vector<LevelSet> effective_family() const;
};

/// V hits every edge of ℱ(Q): each edge has a member σ with ⟦σ⟧ ⊆ ⟦V⟧, so
/// no edge is extendible in the complement of ⟦V⟧.
bool is_hitting_set(const ClopenSet& v, const HittingInstance& inst);

/// max_{τ∈Q} μ_τ(V).
Dyadic hitting_max_cost(const ClopenSet& v, const LevelSet& q);

/// Exact minimum of max_{τ∈Q} μ_τ(V) over hitting sets for ℱ(Q), by branch
/// and bound over one-member-per-edge choices (an optimal hitting set uses
/// only edge members). 0 when ℱ(Q) is empty.
Rational hitting_cost(const HittingInstance& inst);

/// min_{τ∈Q} μ_τ of W's deepest level: the largest q with Q ≺_q W at desk
/// scale. Requires Q to be a level of W and W pruned.
Dyadic robustness(const LevelSet& q, const FinTree& w);

/// Finite stand-in for a closed class of trees: witnesses sharing Q as a
/// level. Its robustness is the best witness robustness.
struct WitnessFamily {
    LevelSet base;
    std::vector<FinTree> witnesses;
};

Dyadic family_robustness(const WitnessFamily& fam);

/// Tree of all σ with |σ| <= depth whose recorded cost exceeds 1-q, closed
/// downward; the enumeration step of the convergence-forcing argument.
FinTree cost_tree(const std::map<BitString, Rational>& costs, const Rational& q,
                  std::size_t depth);

struct DivergencePartition {
    std::set<BitString> g;                         // σ ∈ 2ᵏ with all hitting sets light
    std::map<BitString, std::set<BitString>> d;    // τ -> selected D_τ ⊆ 2ᵏ
    std::map<BitString, Dyadic> m_prime_mass;      // τ -> μ_τ(M'_τ)
    std::size_t union_count = 0;                   // |(2ᵏ−G) ∪ ⋃ D_τ|
    BigInt count_bound;                            // 2^{k−e−n−1} + 2ⁿ·2^{k−e−n−2}
    BigInt count_limit;                            // 2^{k−e}
    bool count_ok = false;
};

/// Pure arithmetic side of the divergence count:
/// lhs = 2^{k−e−n−1} + 2ⁿ·2^{k−e−n−2}, rhs = 2^{k−e}; requires k > e+n+2.
std::pair<BigInt, BigInt> divergence_count_bound(unsigned k, unsigned e, unsigned n);

/// The divergence-partition combinatorics: classifies σ ∈ 2ᵏ by the relative
/// mass of their per-τ hitting sets H(σ,τ) ⊆ ⟦τ⟧, builds the heavy set M_τ
/// at a common refinement depth, and selects D_τ of size 2^{k−e−n−2}
/// maximizing the mass of M'_τ(D). Requires k > e+n+2 and |Q| = 2ⁿ.
DivergencePartition divergence_partition(
    unsigned k, unsigned e, unsigned n, const LevelSet& q,
    const std::map<std::pair<BitString, BitString>, ClopenSet>& h);

} // namespace treelab
