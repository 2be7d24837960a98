#include "treelab/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace treelab {

LevelSet::LevelSet(std::vector<BitString> members) : height_(0) {
    if (members.empty()) return;
    height_ = members.front().length();
    for (const auto& m : members) {
        if (m.length() != height_)
            throw std::invalid_argument("LevelSet: members must have equal length");
        members_.insert(m);
    }
}

FinTree FinTree::closure(const std::vector<BitString>& strings) {
    FinTree t;
    for (const auto& s : strings) {
        for (auto& p : s.prefixes()) t.nodes_.insert(std::move(p));
        t.depth_ = std::max(t.depth_, s.length());
    }
    return t;
}

FinTree FinTree::full(std::size_t depth) {
    return closure(BitString::level(depth));
}

std::vector<BitString> FinTree::level_strings(std::size_t n) const {
    std::vector<BitString> out;
    for (const auto& s : nodes_)
        if (s.length() == n) out.push_back(s);
    return out;
}

bool FinTree::is_pruned() const {
    return *this == pruned();
}

FinTree FinTree::pruned() const {
    return closure(level_strings(depth_));
}

FinTree FinTree::restrict(const LevelSet& f) const {
    FinTree t;
    for (const auto& s : nodes_) {
        bool comp = false;
        for (const auto& m : f.members())
            if (s.comparable(m)) { comp = true; break; }
        if (comp) {
            t.nodes_.insert(s);
            t.depth_ = std::max(t.depth_, s.length());
        }
    }
    return t;
}

LevelRelation level_relation(const LevelSet& f, const LevelSet& g) {
    if (f.height() > g.height())
        throw std::invalid_argument("level_relation: height(F) > height(G)");
    LevelRelation rel;
    bool prefix = true, splitting = true;
    for (const auto& sigma : f.members()) {
        std::size_t ext = 0;
        for (const auto& tau : g.members())
            if (sigma.is_prefix_of(tau)) ++ext;
        if (ext == 0) prefix = false;
        if (ext < 2) splitting = false;
    }
    for (const auto& tau : g.members()) {
        bool covered = false;
        for (const auto& sigma : f.members())
            if (sigma.is_prefix_of(tau)) { covered = true; break; }
        if (!covered) prefix = false;
    }
    rel.is_prefix = prefix;
    rel.is_splitting = prefix && splitting && f != g;
    if (prefix) {
        ClopenSet gc = g.clopen();
        std::optional<Dyadic> md;
        for (const auto& sigma : f.members()) {
            Dyadic d = gc.relative_measure(sigma);
            if (!md || d < *md) md = d;
        }
        rel.min_density = md;
    }
    return rel;
}

FinTree tail(const FinTree& t, const BitString& sigma) {
    if (!t.contains(sigma)) return FinTree();
    std::vector<BitString> suffixes;
    for (const auto& node : t.nodes())
        if (sigma.is_prefix_of(node)) suffixes.push_back(node.suffix(sigma.length()));
    return FinTree::closure(suffixes);
}

std::vector<BitString> van_lambalgen(const BitString& x, unsigned levels) {
    std::vector<BitString> out;
    BitString rest = x;
    for (unsigned n = 0; n < levels; ++n) {
        std::string even, odd;
        for (std::size_t i = 0; i < rest.length(); ++i)
            (i % 2 == 0 ? even : odd) += char('0' + rest.bit(i));
        out.push_back(BitString(even));
        rest = BitString(odd);
    }
    return out;
}

std::optional<BitString> tail_search(const LevelSet& t, const FinTree& w) {
    if (t.empty()) throw std::invalid_argument("tail_search: empty level set");
    std::set<BitString> candidates;
    for (const auto& m : t.members())
        for (const auto& p : m.prefixes()) candidates.insert(p);
    for (const auto& sigma : candidates) { // shortlex order
        bool ok = true;
        for (const auto& m : t.members()) {
            if (!sigma.is_prefix_of(m)) continue;
            BitString tl = m.suffix(sigma.length());
            if (!tl.empty() && !w.contains(tl)) { ok = false; break; }
        }
        if (ok) return sigma;
    }
    return std::nullopt;
}

} // namespace treelab
