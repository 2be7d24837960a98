#include "treelab/clopen.hpp"

#include <algorithm>
#include <stdexcept>

namespace treelab {

ClopenSet::ClopenSet(std::vector<BitString> gens) {
    // shortlex order puts prefixes before extensions, so one pass suffices
    std::sort(gens.begin(), gens.end());
    for (const auto& g : gens) {
        bool absorbed = false;
        for (const auto& kept : gens_) {
            if (kept.is_prefix_of(g)) { absorbed = true; break; }
        }
        if (!absorbed) gens_.insert(g);
    }
}

std::size_t ClopenSet::max_length() const {
    std::size_t m = 0;
    for (const auto& g : gens_) m = std::max(m, g.length());
    return m;
}

Dyadic ClopenSet::measure() const {
    Dyadic m;
    for (const auto& g : gens_) m += Dyadic::cylinder(static_cast<unsigned>(g.length()));
    return m;
}

Dyadic ClopenSet::relative_measure(const BitString& tau) const {
    Dyadic m;
    for (const auto& g : gens_) {
        if (g.is_prefix_of(tau)) return Dyadic(1);
        if (tau.is_prefix_of(g))
            m += Dyadic::cylinder(static_cast<unsigned>(g.length() - tau.length()));
    }
    return m;
}

bool ClopenSet::contains_cylinder(const BitString& sigma) const {
    for (const auto& g : gens_)
        if (g.is_prefix_of(sigma)) return true;
    return false;
}

ClopenSet ClopenSet::unite(const ClopenSet& o) const {
    std::vector<BitString> all(gens_.begin(), gens_.end());
    all.insert(all.end(), o.gens_.begin(), o.gens_.end());
    return ClopenSet(std::move(all));
}

ClopenSet ClopenSet::intersect(const ClopenSet& o) const {
    // common refinement: a cylinder lies in the intersection iff the
    // generators are comparable, in which case the longer one is it
    std::vector<BitString> out;
    for (const auto& a : gens_)
        for (const auto& b : o.gens_) {
            if (a.is_prefix_of(b)) out.push_back(b);
            else if (b.is_prefix_of(a)) out.push_back(a);
        }
    return ClopenSet(std::move(out));
}

ClopenSet ClopenSet::with(const BitString& s) const {
    std::vector<BitString> all(gens_.begin(), gens_.end());
    all.push_back(s);
    return ClopenSet(std::move(all));
}

ClopenSet concat_power(const std::vector<BitString>& q, unsigned n) {
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (i != j && q[i].is_prefix_of(q[j]))
                throw std::invalid_argument("concat_power: generators not prefix-free");
    std::vector<BitString> cur{lambda()};
    for (unsigned r = 0; r < n; ++r) {
        std::vector<BitString> next;
        next.reserve(cur.size() * q.size());
        for (const auto& a : cur)
            for (const auto& b : q) next.push_back(a * b);
        cur = std::move(next);
    }
    return ClopenSet(std::move(cur));
}

} // namespace treelab
