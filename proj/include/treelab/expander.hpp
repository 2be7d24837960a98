#pragma once

#include "treelab/clopen.hpp"
#include "treelab/dyadic.hpp"
#include "treelab/hypergraph.hpp"
#include "treelab/rational.hpp"
#include "treelab/tree.hpp"

#include <vector>

namespace treelab {

/// One converged computation of the staged functional: for every oracle
/// extending `oracle`, arity k, from stage `stage` on, the output is the
/// given level set of at least k strings.
struct ExpanderEntry {
    unsigned stage = 0;
    std::size_t k = 1;
    BitString oracle;
    LevelSet output;
};

/// Finite, stage-indexed table modeling a Turing functional Φ_s(σ;k) on
/// oracle prefixes. Per arity the decided oracle prefixes form an antichain,
/// so oracle masses add up exactly; entries persist once converged.
class StagedExpander {
public:
    StagedExpander() = default;
    explicit StagedExpander(std::vector<ExpanderEntry> entries);

    const std::vector<ExpanderEntry>& entries() const { return entries_; }
    unsigned max_stage() const { return max_stage_; }

    /// Entries of the given arity converged by stage s.
    std::vector<const ExpanderEntry*> active(std::size_t k, unsigned s) const;

private:
    std::vector<ExpanderEntry> entries_;
    unsigned max_stage_ = 0;
};

/// ρ has no prefix in V.
inline bool is_free(const BitString& rho, const ClopenSet& v) {
    return !v.contains_cylinder(rho);
}

/// Every member of the level set is V-free.
bool is_free(const LevelSet& m, const ClopenSet& v);

/// Hypergraph of the stage-s restriction of Φ(·;k) to oracles whose output
/// is V-free: edges are the distinct V-free outputs, weighted by the oracle
/// mass mapping to them. k-fat by the expander invariant.
StringHypergraph expander_hypergraph(const StagedExpander& phi, std::size_t k, unsigned s,
                                     const ClopenSet& v);

struct CoveringStep {
    unsigned stage = 0;
    BitString tau;
    Dyadic p_before, p_after;
    Dyadic mu_v_before, mu_v_after;
    Dyadic delta_f; // newly non-free oracle mass at this step
    Rational g_tau; // edge weight above tau when picked
};

struct CoveringRun {
    ClopenSet v;       // enumerated hitting strings
    ClopenSet h_final; // oracles with converged output
    ClopenSet f_final; // oracles with non-V-free output
    Dyadic d_measure;  // μ(H−F) at the end: converged and V-free
    Rational delta;    // 1/(k·ε), the loop threshold
    std::vector<CoveringStep> trace;
};

/// The covering enumeration loop: scans stages in increasing order and,
/// whenever the V-free converged mass p_s exceeds δ := 1/(k·ε), picks a
/// light prefix τ of the current restricted hypergraph and enumerates it
/// into V. On a finite expander this terminates with μ(V) <= ε and
/// μ(D_k) <= 1/(k·ε).
CoveringRun covering_enumerate(const StagedExpander& phi, std::size_t k, const Rational& eps);

struct DifferenceComponent {
    unsigned k = 0;
    std::size_t arity = 1; // n_k = 2^{2k}
    Rational eps;
    CoveringRun run;
    bool v_bound_ok = false; // μ(V_k) <= ε_k
    bool d_bound_ok = false; // μ(D_k) <= 1/(n_k·ε_k)
};

/// The difference-test schedule n_k = 2^{2k}, ε_k = 2^{-k} (or a caller
/// supplied schedule), one covering run per k <= k_max.
std::vector<DifferenceComponent> difference_test(
    const StagedExpander& phi, unsigned k_max,
    const std::vector<Rational>& eps_schedule = {});

} // namespace treelab
