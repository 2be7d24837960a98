#pragma once

#include "treelab/bitstring.hpp"
#include "treelab/dyadic.hpp"

#include <set>
#include <vector>

namespace treelab {

/// Clopen subset of Cantor space, ⟦V⟧ = union of the cylinders of its
/// generators. Generators are normalized to the prefix-minimal antichain on
/// construction, so equality of representations is equality of sets.
class ClopenSet {
public:
    ClopenSet() = default;
    explicit ClopenSet(std::vector<BitString> gens);
    explicit ClopenSet(const std::set<BitString>& gens)
        : ClopenSet(std::vector<BitString>(gens.begin(), gens.end())) {}

    static ClopenSet cylinder(const BitString& s) {
        return ClopenSet(std::vector<BitString>{s});
    }
    static ClopenSet full() { return cylinder(lambda()); }

    const std::set<BitString>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }
    std::size_t max_length() const;

    /// Exact uniform measure; in [0,1] since the generators are an antichain.
    Dyadic measure() const;

    /// μ_τ(⟦V⟧) = 2^{|τ|} · μ(⟦V⟧ ∩ ⟦τ⟧).
    Dyadic relative_measure(const BitString& tau) const;

    /// ⟦σ⟧ ⊆ ⟦V⟧, decided exactly (σ has a prefix among the generators).
    bool contains_cylinder(const BitString& sigma) const;

    /// Membership of a depth-n cylinder viewed as a point at refinement
    /// depth n >= max_length(): x ∈ ⟦V⟧ iff x has a prefix among the
    /// generators.
    bool contains_refined(const BitString& x) const { return contains_cylinder(x); }

    ClopenSet unite(const ClopenSet& o) const;
    ClopenSet intersect(const ClopenSet& o) const;

    ClopenSet with(const BitString& s) const;

    friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

private:
    std::set<BitString> gens_; // prefix-minimal antichain, shortlex-sorted
};

/// n-fold concatenation Qⁿ = Q∗…∗Q of a prefix-free generator set.
/// Throws if Q is not prefix-free (the measure identity μ(Qⁿ)=μ(Q)ⁿ fails
/// otherwise). Q⁰ = {λ}.
ClopenSet concat_power(const std::vector<BitString>& q, unsigned n);

} // namespace treelab
