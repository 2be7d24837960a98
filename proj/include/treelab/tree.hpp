#pragma once

#include "treelab/bitstring.hpp"
#include "treelab/clopen.hpp"
#include "treelab/dyadic.hpp"

#include <optional>
#include <set>
#include <vector>

namespace treelab {

/// Non-empty set of equal-length strings, identified with the finite tree
/// given by its downward closure. The elements of 𝒯*. An empty LevelSet is
/// tolerated (some searches legitimately produce one) but most relations
/// require non-emptiness.
class LevelSet {
public:
    LevelSet() : height_(0) {}
    explicit LevelSet(std::vector<BitString> members);
    explicit LevelSet(const std::set<BitString>& members)
        : LevelSet(std::vector<BitString>(members.begin(), members.end())) {}

    static LevelSet root() { return LevelSet(std::vector<BitString>{lambda()}); }
    static LevelSet full(std::size_t n) { return LevelSet(BitString::level(n)); }

    const std::set<BitString>& members() const { return members_; }
    std::size_t height() const { return height_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(const BitString& s) const { return members_.count(s) != 0; }

    ClopenSet clopen() const { return ClopenSet(members_); }

    friend bool operator==(const LevelSet&, const LevelSet&) = default;

private:
    std::set<BitString> members_;
    std::size_t height_;
};

/// Finite tree: a set of strings downward closed under the prefix relation.
class FinTree {
public:
    FinTree() = default;

    /// Downward closure of the given strings.
    static FinTree closure(const std::vector<BitString>& strings);
    static FinTree closure(const LevelSet& q) {
        return closure(std::vector<BitString>(q.members().begin(), q.members().end()));
    }
    static FinTree full(std::size_t depth);

    const std::set<BitString>& nodes() const { return nodes_; }
    bool empty() const { return nodes_.empty(); }
    std::size_t depth() const { return depth_; }
    bool contains(const BitString& s) const { return nodes_.count(s) != 0; }

    /// Nodes of length n, as strings.
    std::vector<BitString> level_strings(std::size_t n) const;
    LevelSet level(std::size_t n) const { return LevelSet(level_strings(n)); }
    std::size_t width(std::size_t n) const { return level_strings(n).size(); }

    /// Deepest level, the leaves at desk scale.
    LevelSet deepest_level() const { return level(depth_); }

    /// Every node has a descendant at the deepest level; the finitary
    /// reading of strong positivity.
    bool is_pruned() const;

    /// Drops every node without a descendant at the deepest level.
    FinTree pruned() const;

    /// Restriction to nodes comparable with some member of the level set.
    FinTree restrict(const LevelSet& f) const;

    /// μ_σ of the clopen set of the deepest level.
    Dyadic relative_leaf_measure(const BitString& sigma) const {
        return deepest_level().clopen().relative_measure(sigma);
    }

    friend bool operator==(const FinTree&, const FinTree&) = default;

private:
    std::set<BitString> nodes_;
    std::size_t depth_ = 0;
};

struct LevelRelation {
    bool is_prefix = false;
    bool is_splitting = false;
    std::optional<Dyadic> min_density; // only when is_prefix
};

/// The ⪯ / ≺₂ relations between level sets and the largest q certifying
/// q-extendibility of F in ⟦G⟧. Requires height(F) <= height(G).
LevelRelation level_relation(const LevelSet& f, const LevelSet& g);

/// Tail {τ : σ∗τ ∈ T}; empty when σ ∉ T.
FinTree tail(const FinTree& t, const BitString& sigma);

/// Prefixes of x_{1ⁿ∗0}, n = 0..levels-1, from iterating the even/odd split
/// on the finite word x. The even-position stream gets the extra bit of an
/// odd-length word.
std::vector<BitString> van_lambalgen(const BitString& x, unsigned levels);

/// Least σ (shortlex) that is a prefix of a member of T with every σ-tail of
/// T inside W's node set; models the finite tail search of the ergodicity
/// argument. Empty tails are accepted. nullopt when no σ exists.
std::optional<BitString> tail_search(const LevelSet& t, const FinTree& w);

} // namespace treelab
