#pragma once

#include "treelab/rational.hpp"
#include "treelab/tree.hpp"

#include <map>
#include <optional>

namespace treelab {

/// Lower density function: rational per-node density floors on a level set.
struct LDF {
    LevelSet domain;
    std::map<BitString, Rational> values; // each in [0,1)

    Rational at(const BitString& sigma) const { return values.at(sigma); }
    void validate() const;

    LDF plus(const Rational& eps) const;
};

/// e extends d: domain(d) ⪯ domain(e) and the mass prescribed below each
/// σ ∈ domain(d) is preserved.
bool ldf_extends(const LDF& e, const LDF& d);

struct DenseStatus {
    bool weak = false;
    Rational max_slack; // largest ε with E weakly (d+ε)-dense; negative when not weak
};

/// Weak d-density of a level set and the exact density slack. E is d-dense
/// iff max_slack > 0.
DenseStatus dense_status(const LevelSet& e, const LDF& d);

/// FinTree variant, evaluated on the deepest level.
DenseStatus dense_status(const FinTree& t, const LDF& d);

/// The dense-extension construction: ε := min_σ (μ_σ([T]) − d(σ)) > 0 and
/// e(τ) := μ_τ([T]) − ε/2 clamped at 0, which lands in the open interval
/// (μ_τ([T]) − ε, μ_τ([T])). Requires domain(d) ⪯ E a level of T, T pruned
/// and d-dense. Postconditions (e ≤ d, T e-dense) are asserted.
LDF dense_ext(const LDF& d, const LevelSet& e, const FinTree& t);

/// Forcing condition (F, T, d): F a level of T, T pruned (strongly positive
/// at desk scale) and d-dense.
struct Condition {
    LevelSet f;
    FinTree t;
    LDF d;

    void validate() const;
};

/// q extends p in the condition order: d_q ≤ d_p and T_q ⊆ T_p.
bool condition_extends(const Condition& q, const Condition& p);

struct CondenseResult {
    Condition q;
    Rational delta; // d_q ≡ 1−δ
    Rational eps;   // δ/(n+2)
    std::size_t lq = 0;
    Rational conclusion_lhs; // max_τ (1 − μ_τ([T_q]))
    Rational conclusion_rhs; // (1/(n+1)) · min_τ (1 − d_q(τ))
};

/// Condensation step: grid-searches a dyadic δ (largest feasible first,
/// coarse to fine), then looks for a level l_q > l_p whose high-density
/// members satisfy the counting condition. Running out of tree depth is a
/// reported outcome, not a fault.
std::optional<CondenseResult> condense(const Condition& p, unsigned n,
                                       unsigned grid_bits = 6);

/// Branching step: least level where every member of F_p has two
/// incomparable extensions in T_p; throws when the tree is too shallow or
/// non-branching.
Condition branch(const Condition& p);

} // namespace treelab
