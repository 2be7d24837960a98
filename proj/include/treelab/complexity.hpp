#pragma once

#include "treelab/bitstring.hpp"
#include "treelab/clopen.hpp"
#include "treelab/dyadic.hpp"
#include "treelab/tree.hpp"

#include <limits>
#include <map>
#include <optional>
#include <vector>

namespace treelab {

/// Length-or-infinity: program lengths are small, so a sentinel works and
/// keeps every comparison total.
struct KValue {
    static constexpr long INF = std::numeric_limits<long>::max();
    long v = INF;

    bool finite() const { return v != INF; }
    friend auto operator<=>(const KValue&, const KValue&) = default;
};

/// Toy prefix-free machine: an explicit finite program table. There is no
/// universal machine here; every statement is relative to the table given.
class PrefixMachine {
public:
    PrefixMachine() = default;
    explicit PrefixMachine(std::map<BitString, BitString> table);

    const std::map<BitString, BitString>& table() const { return table_; }

    /// Σ 2^{-|ρ|} over the domain; <= 1 by prefix-freeness, asserted on
    /// construction anyway.
    Dyadic kraft_sum() const;

    /// K_M(σ): length of the shortest program producing σ.
    KValue kolmogorov(const BitString& sigma) const;

    /// |σ| - K(σ), meaningful only when K is finite.
    std::optional<long> deficiency(const BitString& sigma) const {
        KValue k = kolmogorov(sigma);
        if (!k.finite()) return std::nullopt;
        return static_cast<long>(sigma.length()) - k.v;
    }

private:
    std::map<BitString, BitString> table_;
};

struct DeficiencyEntry {
    BitString sigma;
    KValue k;
    std::optional<long> deficiency; // nullopt: unbounded below (K infinite)
};

/// Per-string deficiency records for all strings of length <= n.
std::vector<DeficiencyEntry> deficiency_profile(const PrefixMachine& m, std::size_t n);

/// The depth-n slice of P_c: strings σ ∈ 2ⁿ all of whose prefixes τ satisfy
/// K(τ) >= |τ| - c. May be empty.
LevelSet deficiency_class(const PrefixMachine& m, long c, std::size_t n);

/// Checks the Martin-Löf-test deficiency bound K(σ) < |σ| + c - i on every
/// generator of V; vacuously true for empty V, false on infinite K.
bool test_deficiency_bound(const PrefixMachine& m, const ClopenSet& v, long i, long c);

/// Clopen set generated by the compressible strings
/// {σ : |σ| <= n, K(σ) <= |σ| - c}; its measure is <= 2^{-c} by Kraft.
ClopenSet compressible_set(const PrefixMachine& m, long c, std::size_t n);

} // namespace treelab
