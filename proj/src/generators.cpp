#include "treelab/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace treelab {

namespace {

/// Distinct strings of the given length, chosen without replacement.
std::vector<BitString> distinct_strings(Rng& rng, std::size_t len, std::size_t count) {
    auto pool = BitString::level(len);
    if (count > pool.size())
        throw std::invalid_argument("distinct_strings: level too small");
    std::vector<BitString> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = rng.below(pool.size());
        out.push_back(pool[j]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return out;
}

/// Random antichain: descend from the root, stopping early at random. Some
/// branches are dropped outright, so partial antichains occur too.
void antichain_rec(Rng& rng, const BitString& prefix, std::size_t max_depth,
                   std::vector<BitString>& out) {
    if (prefix.length() == max_depth || (prefix.length() >= 1 && rng.below(3) == 0)) {
        out.push_back(prefix);
        return;
    }
    for (int b = 0; b < 2; ++b)
        if (rng.below(4) != 0) antichain_rec(rng, prefix.append(b == 1), max_depth, out);
}

std::vector<BitString> random_antichain(Rng& rng, std::size_t max_depth) {
    std::vector<BitString> out;
    antichain_rec(rng, lambda(), max_depth, out);
    return out;
}

/// Vertex pool with mixed depths; comparable pairs are welcome.
std::vector<BitString> vertex_pool(Rng& rng, std::size_t min_len, std::size_t max_depth,
                                   std::size_t size) {
    std::set<BitString> pool;
    std::size_t guard = 0;
    while (pool.size() < size && ++guard < 400) {
        std::size_t len = min_len + rng.below(max_depth - min_len + 1);
        pool.insert(rng.string(len));
    }
    return {pool.begin(), pool.end()};
}

std::vector<BitString> pick_distinct(Rng& rng, std::vector<BitString> pool,
                                     std::size_t count) {
    std::vector<BitString> out;
    for (std::size_t i = 0; i < count && !pool.empty(); ++i) {
        std::size_t j = rng.below(pool.size());
        out.push_back(pool[j]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return out;
}

} // namespace

StringHypergraph random_k_fat_hypergraph(Rng& rng, std::size_t k, std::size_t max_depth,
                                         std::size_t max_edges) {
    std::size_t min_len = 1;
    while ((std::size_t(1) << min_len) < k + 4) ++min_len;
    if (min_len > max_depth)
        throw std::invalid_argument("random_k_fat_hypergraph: depth too small for k");
    auto pool = vertex_pool(rng, min_len, max_depth, k + 4 + rng.below(5));

    std::vector<Edge> edges;
    std::size_t cnt = 1 + rng.below(max_edges);
    for (std::size_t i = 0; i < cnt; ++i) {
        std::size_t size = std::min(k + rng.below(3), pool.size());
        auto picked = pick_distinct(rng, pool, size);
        edges.push_back({{picked.begin(), picked.end()}, rng.small_rational()});
    }
    return StringHypergraph(std::move(edges));
}

StringHypergraph random_hypergraph(Rng& rng, std::size_t max_depth, std::size_t max_edges) {
    auto pool = vertex_pool(rng, 1, max_depth, 5 + rng.below(6));
    std::vector<Edge> edges;
    std::size_t cnt = 1 + rng.below(max_edges);
    for (std::size_t i = 0; i < cnt; ++i) {
        std::size_t size = std::min<std::size_t>(1 + rng.below(4), pool.size());
        auto picked = pick_distinct(rng, pool, size);
        Rational w = rng.below(8) == 0 ? Rational(0) : rng.small_rational();
        edges.push_back({{picked.begin(), picked.end()}, w});
    }
    return StringHypergraph(std::move(edges));
}

StagedExpander random_expander(Rng& rng, std::size_t k, std::size_t oracle_depth,
                               std::size_t out_depth) {
    std::vector<std::size_t> arities{k};
    if (k != 4 && rng.coin()) arities.push_back(4);

    std::vector<ExpanderEntry> entries;
    for (std::size_t a : arities) {
        std::size_t min_out = 0;
        while ((std::size_t(1) << min_out) < a) ++min_out;
        if (min_out > out_depth) continue;
        for (const auto& oracle : random_antichain(rng, oracle_depth)) {
            if (rng.below(3) == 0) continue; // diverging oracle prefix
            std::size_t olen = min_out + rng.below(out_depth - min_out + 1);
            std::size_t room = (std::size_t(1) << olen) - a;
            std::size_t size = a + rng.below(std::min<std::size_t>(room, 2) + 1);
            ExpanderEntry e;
            e.stage = 1 + static_cast<unsigned>(rng.below(3));
            e.k = a;
            e.oracle = oracle;
            e.output = LevelSet(distinct_strings(rng, olen, size));
            entries.push_back(std::move(e));
        }
    }
    return StagedExpander(std::move(entries));
}

PrefixMachine random_machine(Rng& rng, std::size_t max_entries) {
    auto domain = random_antichain(rng, 6);
    while (domain.size() > max_entries) domain.erase(domain.begin() + static_cast<std::ptrdiff_t>(rng.below(domain.size())));
    std::map<BitString, BitString> table;
    for (const auto& p : domain) table.emplace(p, rng.string(rng.below(7)));
    return PrefixMachine(std::move(table));
}

HittingInstance random_hitting_instance(Rng& rng, std::size_t max_total_vertices) {
    std::size_t hq = rng.below(2);
    std::size_t qsize = 1 + rng.below(std::size_t(1) << hq);
    LevelSet q(distinct_strings(rng, hq, qsize));

    std::vector<LevelSet> family;
    std::size_t budget = max_total_vertices;
    std::size_t cnt = 1 + rng.below(3);
    for (std::size_t i = 0; i < cnt && budget > q.size(); ++i) {
        std::size_t h = hq + 1 + rng.below(2);
        std::vector<BitString> members;
        for (const auto& tau : q.members()) {
            // one extension per base member, plus occasional extras
            std::size_t extras = rng.below(2);
            auto tails = distinct_strings(rng, h - hq, 1 + extras);
            for (const auto& t : tails) members.push_back(tau * t);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.size() > budget) break;
        budget -= members.size();
        family.emplace_back(std::move(members));
    }
    if (family.empty()) {
        std::vector<BitString> members;
        for (const auto& tau : q.members()) members.push_back(tau * rng.string(1));
        family.emplace_back(std::move(members));
    }
    // chaff the effective family has to filter out
    if (q.size() >= 2 && rng.coin()) {
        auto tau = *q.members().begin();
        family.emplace_back(std::vector<BitString>{tau * rng.string(1)});
    }
    return {std::move(family), std::move(q)};
}

FinTree random_dense_tree(Rng& rng, std::size_t depth, std::size_t leaves_removed) {
    auto leaves = BitString::level(depth);
    if (leaves_removed >= leaves.size())
        throw std::invalid_argument("random_dense_tree: cannot remove every leaf");
    for (std::size_t i = 0; i < leaves_removed; ++i)
        leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(rng.below(leaves.size())));
    return FinTree::closure(leaves);
}

DenseExtInput random_dense_ext_input(Rng& rng) {
    std::size_t depth = 4 + rng.below(2);
    FinTree t = random_dense_tree(rng, depth, rng.below(3));
    std::size_t hd = rng.below(2);
    LevelSet dom = t.level(hd);

    LDF d{dom, {}};
    for (const auto& sigma : dom.members()) {
        Rational mu = t.relative_leaf_measure(sigma).to_rational();
        long a = static_cast<long>(1 + rng.below(6));
        d.values.emplace(sigma, mu * Rational(a, BigInt(a + 2)));
    }
    std::size_t he = hd + 1 + rng.below(depth - hd);
    return {std::move(d), t.level(he), std::move(t)};
}

Condition random_condition(Rng& rng) {
    FinTree t = random_dense_tree(rng, 6, rng.below(3));
    std::size_t lf = rng.below(2);
    LevelSet f = t.level(lf);
    LDF d{f, {}};
    for (const auto& sigma : f.members())
        d.values.emplace(sigma, Rational(static_cast<long>(1 + rng.below(3)), BigInt(15)));
    Condition p{std::move(f), std::move(t), std::move(d)};
    p.validate();
    return p;
}

std::map<std::pair<BitString, BitString>, ClopenSet> random_divergence_family(
    Rng& rng, unsigned k, unsigned e, unsigned n, const LevelSet& q) {
    Rational budget = Rational::pow2(static_cast<long>(k) - e - n - 4);
    std::size_t active_count = std::min<std::size_t>(std::size_t(1) << k, 10 + rng.below(5));
    auto active = distinct_strings(rng, k, active_count);

    // depth deep enough that even two generators per (σ, τ) stay under budget
    std::size_t r = 1;
    while (Rational(static_cast<long>(4 * active_count)) * Rational::pow2(-static_cast<long>(r)) >= budget &&
           r < 12)
        ++r;

    std::map<std::pair<BitString, BitString>, ClopenSet> h;
    for (const auto& tau : q.members()) {
        for (const auto& sigma : active) {
            if (rng.below(4) == 0) continue;
            std::size_t rg = std::min<std::size_t>(r + rng.below(3), 12);
            std::size_t cnt = 1 + rng.below(2);
            std::vector<BitString> gens;
            for (const auto& w : distinct_strings(rng, rg, cnt)) gens.push_back(tau * w);
            h.emplace(std::make_pair(sigma, tau), ClopenSet(gens));
        }
    }
    return h;
}

} // namespace treelab
