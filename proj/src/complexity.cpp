#include "treelab/complexity.hpp"

#include <stdexcept>

namespace treelab {

PrefixMachine::PrefixMachine(std::map<BitString, BitString> table) : table_(std::move(table)) {
    for (auto a = table_.begin(); a != table_.end(); ++a)
        for (auto b = std::next(a); b != table_.end(); ++b)
            if (a->first.comparable(b->first))
                throw std::invalid_argument("PrefixMachine: domain not prefix-free");
    if (kraft_sum() > Dyadic(1))
        throw std::invalid_argument("PrefixMachine: Kraft sum exceeds 1");
}

Dyadic PrefixMachine::kraft_sum() const {
    Dyadic s;
    for (const auto& [prog, out] : table_)
        s += Dyadic::cylinder(static_cast<unsigned>(prog.length()));
    return s;
}

KValue PrefixMachine::kolmogorov(const BitString& sigma) const {
    KValue k;
    for (const auto& [prog, out] : table_)
        if (out == sigma && static_cast<long>(prog.length()) < k.v)
            k.v = static_cast<long>(prog.length());
    return k;
}

std::vector<DeficiencyEntry> deficiency_profile(const PrefixMachine& m, std::size_t n) {
    std::vector<DeficiencyEntry> out;
    for (std::size_t l = 0; l <= n; ++l)
        for (const auto& s : BitString::level(l))
            out.push_back({s, m.kolmogorov(s), m.deficiency(s)});
    return out;
}

LevelSet deficiency_class(const PrefixMachine& m, long c, std::size_t n) {
    std::vector<BitString> members;
    for (const auto& s : BitString::level(n)) {
        bool ok = true;
        for (const auto& tau : s.prefixes()) {
            KValue k = m.kolmogorov(tau);
            if (k.finite() && k.v < static_cast<long>(tau.length()) - c) { ok = false; break; }
        }
        if (ok) members.push_back(s);
    }
    return LevelSet(std::move(members));
}

bool test_deficiency_bound(const PrefixMachine& m, const ClopenSet& v, long i, long c) {
    for (const auto& sigma : v.generators()) {
        KValue k = m.kolmogorov(sigma);
        if (!k.finite() || k.v >= static_cast<long>(sigma.length()) + c - i) return false;
    }
    return true;
}

ClopenSet compressible_set(const PrefixMachine& m, long c, std::size_t n) {
    std::vector<BitString> gens;
    for (std::size_t l = 0; l <= n; ++l)
        for (const auto& s : BitString::level(l)) {
            KValue k = m.kolmogorov(s);
            if (k.finite() && k.v <= static_cast<long>(l) - c) gens.push_back(s);
        }
    return ClopenSet(std::move(gens));
}

} // namespace treelab
